use oportho::{Error, Tolerances};

#[test]
fn defaults_validate() {
    assert!(Tolerances::default().validate().is_ok());
}

#[test]
fn eq_tol_must_sit_in_open_interval() {
    let base = Tolerances::default();
    for bad in [0.0, 1e-3, -1e-9, f64::NAN] {
        assert_eq!(base.with_eq_tol(bad), Err(Error::InvalidTolerance("eq_tol")), "{bad}");
    }
    assert_eq!(base.with_eq_tol(1e-6).unwrap().eq_tol, 1e-6);
}

#[test]
fn each_threshold_is_named_in_its_error() {
    let base = Tolerances::default();
    let cases: [(Tolerances, &str); 4] = [
        (Tolerances { psd_tol: 0.0, ..base }, "psd_tol"),
        (Tolerances { gap_tol: 1.0, ..base }, "gap_tol"),
        (Tolerances { search_tol: -1.0, ..base }, "search_tol"),
        (Tolerances { sweep_angles: 4, ..base }, "sweep_angles"),
    ];
    for (t, name) in cases {
        assert_eq!(t.validate(), Err(Error::InvalidTolerance(name)));
    }
}

#[test]
fn errors_render() {
    let e = Error::InvalidTolerance("eq_tol");
    assert_eq!(e.to_string(), "invalid tolerance: eq_tol");
    assert!(Error::BadSuite("x".into()).to_string().contains("`x`"));
}
