//! Derivative-free scalar search.

const GOLDEN: f64 = 0.381_966_011_250_105_1;
const SQRT_EPS: f64 = 1.490_116_119_384_765_6e-8;
const MAX_EVALS: usize = 500;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Minimum {
    pub x: f64,
    pub fx: f64,
}

/// Brent's bounded minimizer (golden section with parabolic steps).
/// Endpoints are evaluated too, so a boundary minimum is never missed.
pub(crate) fn brent(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, xatol: f64) -> Minimum {
    let (mut a, mut b) = (lo, hi);
    let mut fulc = a + GOLDEN * (b - a);
    let mut nfc = fulc;
    let mut xf = fulc;
    let mut rat: f64 = 0.0;
    let mut e: f64 = 0.0;
    let mut fx = f(xf);
    let mut ffulc = fx;
    let mut fnfc = fx;
    let mut xm = 0.5 * (a + b);
    let mut tol1 = SQRT_EPS * xf.abs() + xatol / 3.0;
    let mut tol2 = 2.0 * tol1;
    let mut evals = 1;

    while (xf - xm).abs() > tol2 - 0.5 * (b - a) && evals < MAX_EVALS {
        let mut golden = true;
        if e.abs() > tol1 {
            golden = false;
            let mut r = (xf - nfc) * (fx - ffulc);
            let mut q = (xf - fulc) * (fx - fnfc);
            let mut p = (xf - fulc) * q - (xf - nfc) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            r = e;
            e = rat;
            if p.abs() < (0.5 * q * r).abs() && p > q * (a - xf) && p < q * (b - xf) {
                rat = p / q;
                let x = xf + rat;
                if x - a < tol2 || b - x < tol2 {
                    rat = if xm >= xf { tol1 } else { -tol1 };
                }
            } else {
                golden = true;
            }
        }
        if golden {
            e = if xf >= xm { a - xf } else { b - xf };
            rat = GOLDEN * e;
        }
        let step = if rat >= 0.0 { rat.abs().max(tol1) } else { -rat.abs().max(tol1) };
        let x = xf + step;
        let fu = f(x);
        evals += 1;
        if fu <= fx {
            if x >= xf {
                a = xf;
            } else {
                b = xf;
            }
            fulc = nfc;
            ffulc = fnfc;
            nfc = xf;
            fnfc = fx;
            xf = x;
            fx = fu;
        } else {
            if x < xf {
                a = x;
            } else {
                b = x;
            }
            if fu <= fnfc || nfc == xf {
                fulc = nfc;
                ffulc = fnfc;
                nfc = x;
                fnfc = fu;
            } else if fu <= ffulc || fulc == xf || fulc == nfc {
                fulc = x;
                ffulc = fu;
            }
        }
        xm = 0.5 * (a + b);
        tol1 = SQRT_EPS * xf.abs() + xatol / 3.0;
        tol2 = 2.0 * tol1;
    }

    let mut best = Minimum { x: xf, fx };
    for end in [lo, hi] {
        let fe = f(end);
        if fe < best.fx {
            best = Minimum { x: end, fx: fe };
        }
    }
    best
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct PlanarMinimum {
    pub x: f64,
    pub y: f64,
    pub fxy: f64,
}

/// Minimizes a convex function over the square [−r, r]² by nesting two
/// bounded Brent searches. Nesting is exact for convex functions: the
/// partial minimum over y is convex in x.
pub(crate) fn planar(mut f: impl FnMut(f64, f64) -> f64, r: f64, xatol: f64) -> PlanarMinimum {
    let mut best = PlanarMinimum { x: 0.0, y: 0.0, fxy: f64::INFINITY };
    let _ = brent(
        |x| {
            let inner = brent(|y| f(x, y), -r, r, xatol);
            if inner.fx < best.fxy {
                best = PlanarMinimum { x, y: inner.x, fxy: inner.fx };
            }
            inner.fx
        },
        -r,
        r,
        xatol,
    );
    best
}

/// Root of `h` on [a, b] given a sign change, by bisection.
pub(crate) fn bisect(mut h: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, xatol: f64) -> f64 {
    let mut ha = h(a);
    if ha == 0.0 {
        return a;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= xatol || m == a || m == b {
            break;
        }
        let hm = h(m);
        if hm == 0.0 {
            return m;
        }
        if (hm > 0.0) == (ha > 0.0) {
            a = m;
            ha = hm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
