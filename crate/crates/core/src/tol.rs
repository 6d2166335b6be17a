use crate::error::{Error, Result};

/// Thresholds governing every numerical decision.
///
/// `eq_tol` is relative to the natural scale of each comparison. Decisions
/// whose margin lands between `-eq_tol` and `-10 * eq_tol` (in scale units)
/// are reported as inconclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eq_tol: f64,
    pub psd_tol: f64,
    pub gap_tol: f64,
    pub search_tol: f64,
    /// Number of directions in the numerical-range support sweep.
    pub sweep_angles: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eq_tol: 1e-9,
            psd_tol: 1e-10,
            gap_tol: 1e-10,
            search_tol: 1e-11,
            sweep_angles: 256,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let check = |v: f64, name: &'static str| {
            if v > 0.0 && v < 1e-3 {
                Ok(())
            } else {
                Err(Error::InvalidTolerance(name))
            }
        };
        check(self.eq_tol, "eq_tol")?;
        check(self.psd_tol, "psd_tol")?;
        check(self.gap_tol, "gap_tol")?;
        check(self.search_tol, "search_tol")?;
        if self.sweep_angles < 8 {
            return Err(Error::InvalidTolerance("sweep_angles"));
        }
        Ok(())
    }

    pub fn with_eq_tol(mut self, eq_tol: f64) -> Result<Self> {
        self.eq_tol = eq_tol;
        self.validate()?;
        Ok(self)
    }
}
