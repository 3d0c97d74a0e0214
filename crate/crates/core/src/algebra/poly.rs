//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! `Poly` is the internal substrate: it admits inhomogeneous values (the
//! parser needs them) and the zero polynomial. The public homogeneous
//! wrapper lives in [`super::form`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::Ring;
use crate::arith::gcd_all;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    // grevlex-ascending by key; no zero coefficients stored
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(ring.num_vars()), c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, BigInt::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.num_vars(), index), BigInt::one());
        Poly { ring: ring.clone(), terms }
    }

    pub fn from_terms(ring: &Ring, iter: impl IntoIterator<Item = (Monomial, BigInt)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().degree() == 0)
    }

    /// Max total degree over terms; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Common total degree when homogeneous (constants included), else None.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading (grevlex-greatest) term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut out = Poly::zero(&self.ring);
        // iterate over the smaller operand's terms in the outer loop
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                out.add_term(m.with_exponent(var, e - 1), c * BigInt::from(e));
            }
        }
        out
    }

    pub fn evaluate(&self, coords: &[BigInt]) -> BigInt {
        assert_eq!(coords.len(), self.ring.num_vars(), "coordinate arity mismatch");
        // per-variable power cache
        let mut max_exp = vec![0u32; coords.len()];
        for m in self.terms.keys() {
            for (i, e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let pows: Vec<Vec<BigInt>> = coords
            .iter()
            .zip(&max_exp)
            .map(|(x, &top)| {
                let mut v = Vec::with_capacity(top as usize + 1);
                v.push(BigInt::one());
                for k in 1..=top {
                    let prev = v[(k - 1) as usize].clone();
                    v.push(prev * x);
                }
                v
            })
            .collect();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= &pows[i][e as usize];
                }
            }
            total += t;
        }
        total
    }

    /// Substitute `subs[i]` for variable `i` and expand.
    pub fn substitute(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.ring.num_vars(), "substitution arity mismatch");
        let target = subs.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut max_exp = vec![0u32; self.ring.num_vars()];
        for m in self.terms.keys() {
            for (i, e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let pows: Vec<Vec<Poly>> = subs
            .iter()
            .zip(&max_exp)
            .map(|(s, &top)| {
                let mut v = Vec::with_capacity(top as usize + 1);
                v.push(Poly::one(&target));
                for k in 1..=top {
                    let prev = v[(k - 1) as usize].clone();
                    v.push(prev.mul(s));
                }
                v
            })
            .collect();
        let mut total = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[i][e as usize]);
                }
            }
            total = total.add(&t);
        }
        total
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        gcd_all(&self.terms.values().cloned().collect::<Vec<_>>())
    }

    /// Divide out the integer content and fix the sign so the leading
    /// coefficient is positive. Zero stays zero.
    pub fn canonical(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        assert!(!c.is_zero());
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| {
                    let (q, r) = cc.div_rem(c);
                    assert!(r.is_zero(), "scalar division must be exact");
                    (m.clone(), q)
                })
                .collect(),
        }
    }

    /// Exact division test in Z[x..]: Some(q) with self = q*divisor, where q
    /// has integer coefficients; None otherwise. For a primitive divisor this
    /// coincides with divisibility over Q by the Gauss lemma.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        self.assert_same_ring(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading() {
            let qm = dm.div(rm)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let piece = divisor.mul_term(&qm, &qc);
            rem = rem.sub(&piece);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// True when `other == c * self` for some nonzero rational c.
    pub fn proportional(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.canonical() == other.canonical()
    }

    /// Largest e with `var^e` dividing the polynomial.
    pub fn var_multiplicity(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).min().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// Degree in a single variable; None for zero.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Coefficient of `var^e`, as a polynomial with that variable removed
    /// (exponent zeroed).
    pub fn coefficient_of_var_power(&self, var: usize, e: u32) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.exponent(var) == e {
                out.add_term(m.with_exponent(var, 0), c.clone());
            }
        }
        out
    }

    /// Restrict to the coordinate plane spanned by `keep`: all other
    /// variables are set to zero.
    pub fn restrict_to_plane(&self, keep: &[usize]) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let outside = m
                .exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && !keep.contains(&i));
            if !outside {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Total ordering used for canonical component lists: compare term
    /// sequences from the leading end; a strict prefix sorts first.
    pub fn canonical_cmp(&self, other: &Poly) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    // larger monomial sorts earlier
                    match mb.cmp(ma) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    match cb.cmp(ca) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Poly) {
        assert!(
            self.ring == other.ring,
            "polynomial ring mismatch: {:?} vs {:?}",
            self.ring.var_names(),
            other.ring.var_names()
        );
    }

    /// Canonical text form: grevlex-descending terms, `*` between factors,
    /// `^` for powers. Parses back to the same term map.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = self.ring.var_names();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                parts.push(abs.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(names[v].clone()),
                    _ => parts.push(format!("{}^{}", names[v], e)),
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}
