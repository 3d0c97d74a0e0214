//! Integer helpers: gcds over slices, deterministic primality, small-effort
//! factorization, and capped divisor enumeration.
//!
//! Factorization here only ever feeds rational-root candidate generation and
//! test oracles; everything is budgeted and reports failure instead of
//! stalling on a hard composite.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// gcd of a slice, always nonnegative; zero for an empty slice.
pub fn gcd_all(values: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Largest e with p^e dividing n. n must be nonzero.
pub fn valuation(n: &BigInt, p: &BigUint) -> u64 {
    debug_assert!(!n.is_zero());
    let p: BigInt = BigInt::from(p.clone());
    let mut m = n.abs();
    let mut e = 0u64;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

fn pow_mod(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> BigUint {
    base.modpow(exp, modulus)
}

/// Deterministic Miller-Rabin.
///
/// The witness set {2,...,37} decides primality for every n below
/// 3.317e24. Beyond that bound the same witnesses are used as a strong
/// probabilistic test; place primes in practice are far smaller.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const SMALL: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &SMALL {
        let a = BigUint::from(a);
        let mut x = pow_mod(&a, &d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of an odd composite,
/// or None when the iteration budget runs out.
fn pollard_rho(n: &BigUint, seed: u64, budget: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Some(two);
    }
    let c = BigUint::from(seed.max(1));
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut x = BigUint::from(2u32);
    let mut y = x.clone();
    let mut d = one.clone();
    let mut steps = 0u64;
    while d == one {
        if steps > budget {
            return None;
        }
        x = f(&x);
        y = f(&f(&y));
        let diff = if x > y { &x - &y } else { &y - &x };
        if diff.is_zero() {
            return None; // cycle without factor; caller retries with new seed
        }
        d = diff.gcd(n);
        steps += 1;
    }
    if d == *n {
        None
    } else {
        Some(d)
    }
}

/// Factor |n| with trial division up to 2^20 followed by Pollard rho.
/// Returns None when a cofactor resists the budget.
pub fn factor(n: &BigInt) -> Option<Vec<(BigUint, u32)>> {
    let mut m = n.abs().to_biguint().expect("abs is nonnegative");
    if m.is_zero() {
        return None;
    }
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut push = |p: BigUint, e: u32, out: &mut Vec<(BigUint, u32)>| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            out.push((p, e));
        }
    };
    let mut d = 2u64;
    while d <= (1 << 20) {
        let db = BigUint::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime(&c) {
            push(c, 1, &mut out);
            continue;
        }
        let mut found = None;
        for seed in 1..=24u64 {
            if let Some(f) = pollard_rho(&c, seed, 2_000_000) {
                found = Some(f);
                break;
            }
        }
        let f = found?;
        stack.push(&c / &f);
        stack.push(f);
    }
    out.sort();
    Some(out)
}

/// All positive divisors of |n|, or None when there are more than `cap`
/// or factorization fails.
pub fn divisors_capped(n: &BigInt, cap: usize) -> Option<Vec<BigUint>> {
    let factors = factor(n)?;
    let mut count: usize = 1;
    for (_, e) in &factors {
        count = count.checked_mul(*e as usize + 1)?;
        if count > cap {
            return None;
        }
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in &factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes = [2u32, 3, 5, 7, 11, 65537, 999983];
        for p in primes {
            assert!(is_prime(&BigUint::from(p)), "{p} should be prime");
        }
        let composites = [1u32, 4, 9, 91, 561, 65536, 999981];
        for c in composites {
            assert!(!is_prime(&BigUint::from(c)), "{c} should be composite");
        }
    }

    #[test]
    fn valuation_defining_property() {
        let p = BigUint::from(7u32);
        let n = BigInt::from(7i64.pow(5) * 12);
        assert_eq!(valuation(&n, &p), 5);
        assert_eq!(valuation(&BigInt::from(12), &p), 0);
        assert_eq!(valuation(&BigInt::from(12), &BigUint::from(2u32)), 2);
        assert_eq!(valuation(&BigInt::from(12), &BigUint::from(5u32)), 0);
    }

    #[test]
    fn factor_reconstructs() {
        for n in [2i64, 12, 1296, 5308497, 73331944, 999983 * 2] {
            let n = BigInt::from(n);
            let fs = factor(&n).unwrap();
            let mut prod = BigInt::one();
            for (p, e) in &fs {
                assert!(is_prime(p));
                for _ in 0..*e {
                    prod *= BigInt::from(p.clone());
                }
            }
            assert_eq!(prod, n.abs());
        }
    }

    #[test]
    fn divisors_of_12() {
        let ds = divisors_capped(&BigInt::from(12), 100).unwrap();
        let expect: Vec<BigUint> = [1u32, 2, 3, 4, 6, 12].iter().map(|&d| BigUint::from(d)).collect();
        assert_eq!(ds, expect);
    }
}
