//! Y-resultants over F[X] via the subresultant pseudo-remainder sequence.

use crate::bipoly::BiPoly;
use crate::error::Result;
use crate::poly::UniPoly;

type YPoly = Vec<UniPoly>;

fn ydeg(p: &YPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(p: &mut YPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = ydeg(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    let da = match ydeg(&r) {
        Some(d) if d >= db => d,
        _ => return r,
    };
    let mut remaining = da - db + 1;
    while let Some(dr) = ydeg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[shift + k] = &r[shift + k] - &(&lr * bk);
            }
        }
        trim(&mut r);
        remaining -= 1;
    }
    if remaining > 0 {
        let factor = lb.pow(remaining as u64);
        for c in r.iter_mut() {
            *c = &*c * &factor;
        }
    }
    r
}

fn div_all(p: &YPoly, d: &UniPoly) -> Result<YPoly> {
    p.iter().map(|c| c.div_exact(d)).collect()
}

/// `Res_Y(f, g)` as a polynomial in X.
///
/// Returns the zero polynomial (degree −∞) exactly when `f` and `g` share a
/// factor of positive Y-degree, or when either input is zero.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly> {
    let field = f.field();
    let zero = UniPoly::zero(field);
    let mut a = f.y_coeffs();
    let mut b = g.y_coeffs();
    let (Some(mut da), Some(mut db)) = (ydeg(&a), ydeg(&b)) else {
        return Ok(zero);
    };
    let mut sign_negative = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = true;
        }
    }
    if db == 0 {
        // Res(a, c) = c^deg(a) for c constant in Y
        let r = b[0].pow(da as u64);
        return Ok(if sign_negative { -&r } else { r });
    }
    let mut g_acc = UniPoly::one(field);
    let mut h_acc = UniPoly::one(field);
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = prem(&a, &b);
        let Some(dr) = ydeg(&r) else {
            return Ok(zero);
        };
        a = b;
        da = db;
        let divisor = &g_acc * &h_acc.pow(delta as u64);
        b = div_all(&r, &divisor)?;
        db = dr;
        g_acc = a[da].clone();
        h_acc = if delta == 0 {
            h_acc
        } else {
            g_acc.pow(delta as u64).div_exact(&h_acc.pow(delta as u64 - 1))?
        };
        if db == 0 {
            let num = b[0].pow(da as u64);
            let res = if da == 0 {
                num
            } else {
                num.div_exact(&h_acc.pow(da as u64 - 1))?
            };
            return Ok(if sign_negative { -&res } else { res });
        }
    }
}

/// `deg_X Res_Y(f, g)`, with `None` for −∞.
pub fn resultant_degree(f: &BiPoly, g: &BiPoly) -> Result<Option<usize>> {
    Ok(resultant_y(f, g)?.degree())
}
