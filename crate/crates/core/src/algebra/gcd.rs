//! Multivariate GCD by subresultant polynomial remainder sequences on the
//! last occurring variable, with content/primitive-part recursion.
//!
//! Results are generators of the gcd ideal in Q[x_0..x_N], represented as
//! primitive integer polynomials with canonical sign; two nonzero constants
//! have gcd 1.

use num_traits::One;

use super::monomial::Monomial;
use super::poly::Poly;

/// Primitive canonical-sign gcd. Zero arguments degrade gracefully:
/// gcd(0, b) is the canonical primitive part of b.
pub(crate) fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    let num_vars = a.ring().num_vars();
    let main = (0..num_vars).rev().find(|&v| a.uses_var(v) || b.uses_var(v));
    let v = match main {
        None => return Poly::one(a.ring()), // both constants
        Some(v) => v,
    };
    if !a.uses_var(v) {
        // gcd is v-free, so it divides every v-coefficient of b
        return poly_gcd(a, &content_wrt(b, v));
    }
    if !b.uses_var(v) {
        return poly_gcd(&content_wrt(a, v), b);
    }
    let ca = content_wrt(a, v);
    let cb = content_wrt(b, v);
    let cg = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (hi, lo) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    let g = match subresultant_prs(hi, lo, v) {
        Some(r) => {
            let c = content_wrt(&r, v);
            r.div_exact(&c).expect("content divides")
        }
        None => Poly::one(a.ring()),
    };
    let result = cg.mul(&g).canonical();
    debug_assert!(a.div_exact(&result).is_some(), "gcd must divide first argument");
    debug_assert!(b.div_exact(&result).is_some(), "gcd must divide second argument");
    result
}

/// Primitive gcd of the coefficients of `p` viewed in the variable `v`.
pub(crate) fn content_wrt(p: &Poly, v: usize) -> Poly {
    let d = p.degree_in(v).expect("content of the zero polynomial");
    let mut g = Poly::zero(p.ring());
    for e in 0..=d {
        let c = p.coefficient_of_var_power(v, e);
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() && !g.is_zero() {
            return Poly::one(p.ring());
        }
    }
    g
}

fn leading_coeff_in(p: &Poly, v: usize) -> (u32, Poly) {
    let d = p.degree_in(v).expect("nonzero required");
    (d, p.coefficient_of_var_power(v, d))
}

fn mul_var_pow(p: &Poly, v: usize, k: u32) -> Poly {
    if k == 0 {
        return p.clone();
    }
    let m = Monomial::var(p.ring().num_vars(), v).pow(k);
    p.mul_term(&m, &num_bigint::BigInt::one())
}

/// Pseudo-remainder: prem(a, b) = lc_v(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let (db, lb) = leading_coeff_in(b, v);
    let da = a.degree_in(v).expect("nonzero required");
    debug_assert!(da >= db);
    let mut e = da - db + 1;
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if dr < db {
            break;
        }
        let lr = r.coefficient_of_var_power(v, dr);
        r = r.mul(&lb).sub(&mul_var_pow(&b.mul(&lr), v, dr - db));
        e -= 1;
    }
    if e > 0 {
        r = r.mul(&lb.pow(e));
    }
    r
}

/// Subresultant PRS of `a`, `b` (both of positive degree in `v`,
/// deg_v a >= deg_v b). Returns the final nonzero remainder whose primitive
/// part is the gcd, or None when the inputs are coprime in `v`.
fn subresultant_prs(mut a: Poly, mut b: Poly, v: usize) -> Option<Poly> {
    let one = Poly::one(a.ring());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.degree_in(v).expect("prs operand vanished");
        let db = b.degree_in(v).expect("prs operand vanished");
        let delta = da - db;
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return Some(b);
        }
        if r.degree_in(v) == Some(0) {
            return None;
        }
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = leading_coeff_in(&a, v).1;
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-update divides"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::Ring;

    fn ring() -> Ring {
        Ring::new(vec!["x".into(), "y".into(), "z".into()]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    #[test]
    fn square_factor() {
        let g = poly_gcd(&p("x^2 - y^2"), &p("x^2 + 2xy + y^2"));
        assert_eq!(g, p("x + y"));
    }

    #[test]
    fn coprime_variables() {
        assert_eq!(poly_gcd(&p("x"), &p("y")), p("1"));
    }

    #[test]
    fn idempotent() {
        let f = p("3x^2y - 6y^2z + 9xz^2");
        let g = poly_gcd(&f, &f);
        assert_eq!(g, f.canonical());
    }

    #[test]
    fn common_product_factor() {
        let a = p("(x+y+z)(x^2+y^2)");
        let b = p("(x+y+z)(x-z)");
        assert_eq!(poly_gcd(&a, &b), p("x+y+z"));
    }

    #[test]
    fn content_recursion() {
        // gcd taken across a variable-free pairing
        let a = p("x^2*y");
        let b = p("x*y^2");
        assert_eq!(poly_gcd(&a, &b), p("x*y"));
    }

    #[test]
    fn constants_give_one() {
        assert_eq!(poly_gcd(&p("4"), &p("6")), p("1"));
        assert_eq!(poly_gcd(&p("2x"), &p("2y")), p("1"));
    }

    #[test]
    fn sign_normalization() {
        let g = poly_gcd(&p("-x^2+y^2"), &p("-x-y"));
        assert_eq!(g, p("x+y"));
    }
}
