//! Exact arithmetic in F_q, q = p^m, represented in the polynomial basis
//! over F_p with a caller-supplied (or table-default) irreducible modulus.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Description of a finite field F_q with q = p^m.
///
/// Elements are coordinate vectors in the polynomial basis
/// `1, x, …, x^{m-1}` of `F_p[x]/(modulus)`. Any irreducible modulus works;
/// no fixed embedding is assumed.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    /// Monic, irreducible over F_p, length m+1, lowest degree first.
    modulus: Vec<u64>,
}

impl FieldSpec {
    /// Builds a spec, verifying that `p` is prime and `modulus` is monic of
    /// degree `m` and irreducible over F_p (by trial factorization).
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<FieldSpec>> {
        if !is_prime(p) {
            return Err(Error::PreconditionViolated(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::PreconditionViolated(
                "modulus must have degree >= 1".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::PreconditionViolated(
                "modulus coefficients must lie in 0..p".into(),
            ));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::PreconditionViolated("modulus must be monic".into()));
        }
        let m = modulus.len() - 1;
        if m > 1 && !fp_poly_is_irreducible(p, &modulus)? {
            return Err(Error::PreconditionViolated(
                "modulus is reducible over F_p".into(),
            ));
        }
        Ok(Arc::new(FieldSpec { p, m, modulus }))
    }

    /// The prime field F_p (m = 1, modulus x).
    pub fn prime_field(p: u64) -> Result<Arc<FieldSpec>> {
        FieldSpec::new(p, vec![0, 1])
    }

    /// F_{p^m} with the lexicographically smallest monic irreducible modulus.
    pub fn gf(p: u64, m: usize) -> Result<Arc<FieldSpec>> {
        if m == 0 {
            return Err(Error::PreconditionViolated(
                "extension degree must be >= 1".into(),
            ));
        }
        if m == 1 {
            return FieldSpec::prime_field(p);
        }
        if !is_prime(p) {
            return Err(Error::PreconditionViolated(format!("{p} is not prime")));
        }
        // Counter over the m non-leading coefficients, low digit first.
        let mut low = vec![0u64; m];
        loop {
            let mut modulus = low.clone();
            modulus.push(1);
            if fp_poly_is_irreducible(p, &modulus)? {
                return FieldSpec::new(p, modulus);
            }
            let mut i = 0;
            loop {
                if i == m {
                    return Err(Error::InternalInvariantViolated(
                        "no irreducible modulus found".into(),
                    ));
                }
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// q = p^m, checked. Errors if q does not fit in u64.
    pub fn q(&self) -> Result<u64> {
        let mut q: u64 = 1;
        for _ in 0..self.m {
            q = q
                .checked_mul(self.p)
                .ok_or_else(|| Error::PreconditionViolated("q = p^m overflows u64".into()))?;
        }
        Ok(q)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub(crate) fn same(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub(crate) fn check_same(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> Result<()> {
        if FieldSpec::same(a, b) {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "F_{}^{} vs F_{}^{}",
                a.p, a.m, b.p, b.m
            )))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.m)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Coords {
    /// m = 1: a single residue mod p.
    Prime(u64),
    /// m > 1: m coordinates, lowest basis power first.
    Ext(Box<[u64]>),
}

/// An element of F_q. Immutable; carries its field spec.
#[derive(Debug, Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    c: Coords,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        FieldSpec::same(&self.spec, &other.spec) && self.c == other.c
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl FieldElement {
    pub fn zero(spec: &Arc<FieldSpec>) -> FieldElement {
        Self::from_coords_reduced(spec, &[])
    }

    pub fn one(spec: &Arc<FieldSpec>) -> FieldElement {
        Self::from_coords_reduced(spec, &[1])
    }

    /// Element of the prime subfield from an integer (reduced mod p).
    pub fn from_u64(spec: &Arc<FieldSpec>, n: u64) -> FieldElement {
        Self::from_coords_reduced(spec, &[n % spec.p])
    }

    pub fn from_i64(spec: &Arc<FieldSpec>, n: i64) -> FieldElement {
        let p = spec.p as i64;
        Self::from_u64(spec, n.rem_euclid(p) as u64)
    }

    /// Element from coordinates in the polynomial basis; must all be < p and
    /// at most m of them.
    pub fn from_coords(spec: &Arc<FieldSpec>, coords: &[u64]) -> Result<FieldElement> {
        if coords.len() > spec.m {
            return Err(Error::PreconditionViolated(format!(
                "{} coordinates for extension degree {}",
                coords.len(),
                spec.m
            )));
        }
        if coords.iter().any(|&c| c >= spec.p) {
            return Err(Error::PreconditionViolated(
                "coordinate out of range".into(),
            ));
        }
        Ok(Self::from_coords_reduced(spec, coords))
    }

    fn from_coords_reduced(spec: &Arc<FieldSpec>, coords: &[u64]) -> FieldElement {
        let c = if spec.m == 1 {
            Coords::Prime(coords.first().copied().unwrap_or(0))
        } else {
            let mut v = vec![0u64; spec.m];
            v[..coords.len()].copy_from_slice(coords);
            Coords::Ext(v.into_boxed_slice())
        };
        FieldElement {
            spec: Arc::clone(spec),
            c,
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coords(&self) -> Vec<u64> {
        match &self.c {
            Coords::Prime(a) => vec![*a],
            Coords::Ext(v) => v.to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.c {
            Coords::Prime(a) => *a == 0,
            Coords::Ext(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.c {
            Coords::Prime(a) => *a == 1,
            Coords::Ext(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        FieldSpec::check_same(&self.spec, &other.spec)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        FieldSpec::check_same(&self.spec, &other.spec)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        FieldSpec::check_same(&self.spec, &other.spec)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.spec.p;
        match &self.c {
            Coords::Prime(a) => {
                // Fermat: a^(p-2) mod p.
                Ok(FieldElement {
                    spec: Arc::clone(&self.spec),
                    c: Coords::Prime(mod_pow(*a, p - 2, p)),
                })
            }
            Coords::Ext(v) => {
                let inv = fp_poly_inverse_mod(p, v, &self.spec.modulus)?;
                Ok(Self::from_coords_reduced(&self.spec, &inv))
            }
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.p;
        let c = match &self.c {
            Coords::Prime(a) => Coords::Prime(if *a == 0 { 0 } else { p - a }),
            Coords::Ext(v) => Coords::Ext(
                v.iter()
                    .map(|&c| if c == 0 { 0 } else { p - c })
                    .collect::<Vec<_>>()
                    .into_boxed_slice(),
            ),
        };
        FieldElement {
            spec: Arc::clone(&self.spec),
            c,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius automorphism x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.spec.p)
    }

    /// x -> x^{p^k}, iterated Frobenius.
    pub fn frobenius_pow(&self, k: u32) -> FieldElement {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.frobenius();
        }
        x
    }

    /// A square root if one exists. Char 2 uses x^{q/2}; odd characteristic
    /// searches exhaustively (guarded to small q).
    pub fn sqrt(&self) -> Result<Option<FieldElement>> {
        let q = self.spec.q()?;
        if self.spec.p == 2 {
            return Ok(Some(self.pow(q / 2)));
        }
        if q > 1 << 16 {
            return Err(Error::NotApplicable(
                "square-root search not supported for q > 2^16".into(),
            ));
        }
        for cand in self.spec.iter_elements() {
            if cand.mul_unchecked(&cand) == *self {
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }

    pub(crate) fn add_unchecked(&self, other: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        let c = match (&self.c, &other.c) {
            (Coords::Prime(a), Coords::Prime(b)) => Coords::Prime(mod_add(*a, *b, p)),
            (Coords::Ext(a), Coords::Ext(b)) => Coords::Ext(
                a.iter()
                    .zip(b.iter())
                    .map(|(&x, &y)| mod_add(x, y, p))
                    .collect::<Vec<_>>()
                    .into_boxed_slice(),
            ),
            _ => unreachable!("same spec implies same repr"),
        };
        FieldElement {
            spec: Arc::clone(&self.spec),
            c,
        }
    }

    pub(crate) fn sub_unchecked(&self, other: &FieldElement) -> FieldElement {
        self.add_unchecked(&other.neg())
    }

    pub(crate) fn mul_unchecked(&self, other: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        let c = match (&self.c, &other.c) {
            (Coords::Prime(a), Coords::Prime(b)) => Coords::Prime(mod_mul(*a, *b, p)),
            (Coords::Ext(a), Coords::Ext(b)) => {
                let prod = fp_poly_mul_mod(p, a, b, &self.spec.modulus);
                Coords::Ext(prod.into_boxed_slice())
            }
            _ => unreachable!("same spec implies same repr"),
        };
        FieldElement {
            spec: Arc::clone(&self.spec),
            c,
        }
    }

    /// m = 1 fast-path accessor.
    pub(crate) fn prime_value(&self) -> Option<u64> {
        match &self.c {
            Coords::Prime(a) => Some(*a),
            Coords::Ext(_) => None,
        }
    }
}

impl FieldSpec {
    /// Iterates all q elements (coordinate counter). Intended for small q.
    pub fn iter_elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> {
        let spec = Arc::clone(self);
        let m = self.m;
        let p = self.p;
        let mut counter = vec![0u64; m];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let el = FieldElement::from_coords_reduced(&spec, &counter);
            let mut i = 0;
            loop {
                if i == m {
                    done = true;
                    break;
                }
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            Some(el)
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.c {
            Coords::Prime(a) => write!(f, "{a}"),
            Coords::Ext(v) => {
                write!(f, "[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Parses a field element token: a (possibly signed) integer for m = 1, or
/// `[c0,c1,...]` for extensions. Integers are reduced mod p.
pub fn parse_element(spec: &Arc<FieldSpec>, s: &str) -> Result<FieldElement> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated element literal {s:?}")))?;
        let coords: Vec<u64> = inner
            .split(',')
            .map(|t| parse_residue(spec.p(), t))
            .collect::<Result<_>>()?;
        if coords.len() != spec.m() {
            return Err(Error::Parse(format!(
                "element literal {s:?} has {} coordinates, expected {}",
                coords.len(),
                spec.m()
            )));
        }
        FieldElement::from_coords(spec, &coords)
    } else {
        Ok(FieldElement::from_u64(spec, parse_residue(spec.p(), s)?))
    }
}

fn parse_residue(p: u64, s: &str) -> Result<u64> {
    let t = s.trim();
    let n: i128 = t
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))?;
    Ok(n.rem_euclid(p as i128) as u64)
}

#[inline]
fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, a, p);
        }
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---- F_p[x] helpers on raw coefficient vectors (lowest degree first) ----

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mod_mul(x, y, p)) % p;
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of a by b (b nonzero, any leading coefficient).
fn fp_poly_rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let mut bb = b.to_vec();
    fp_trim(&mut bb);
    assert!(!bb.is_empty());
    let lead_inv = mod_pow(*bb.last().unwrap(), p - 2, p);
    while r.len() >= bb.len() {
        let shift = r.len() - bb.len();
        let factor = mod_mul(*r.last().unwrap(), lead_inv, p);
        for (i, &c) in bb.iter().enumerate() {
            let sub = mod_mul(factor, c, p);
            let idx = i + shift;
            r[idx] = (r[idx] + p - sub) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_poly_mul_mod(p: u64, a: &[u64], b: &[u64], modulus: &[u64]) -> Vec<u64> {
    let prod = fp_poly_mul(p, a, b);
    let mut rem = fp_poly_rem(p, &prod, modulus);
    rem.resize(modulus.len() - 1, 0);
    rem
}

fn fp_poly_inverse_mod(p: u64, a: &[u64], modulus: &[u64]) -> Result<Vec<u64>> {
    // Extended Euclid in F_p[x].
    let mut r0: Vec<u64> = modulus.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    fp_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // r0 = q*r1 + r; compute q by repeated leading-term elimination.
        let mut q: Vec<u64> = vec![];
        let mut r = r0.clone();
        let lead_inv = mod_pow(*r1.last().unwrap(), p - 2, p);
        while r.len() >= r1.len() && !r.is_empty() {
            let shift = r.len() - r1.len();
            let factor = mod_mul(*r.last().unwrap(), lead_inv, p);
            if q.len() < shift + 1 {
                q.resize(shift + 1, 0);
            }
            q[shift] = (q[shift] + factor) % p;
            for (i, &c) in r1.iter().enumerate() {
                let sub = mod_mul(factor, c, p);
                let idx = i + shift;
                r[idx] = (r[idx] + p - sub) % p;
            }
            fp_trim(&mut r);
        }
        let s = {
            let qs1 = fp_poly_mul(p, &q, &s1);
            let mut out = s0.clone();
            if out.len() < qs1.len() {
                out.resize(qs1.len(), 0);
            }
            for (i, &c) in qs1.iter().enumerate() {
                out[i] = (out[i] + p - c) % p;
            }
            fp_trim(&mut out);
            out
        };
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return Err(Error::InternalInvariantViolated(
            "element not invertible mod modulus".into(),
        ));
    }
    let scale = mod_pow(r0[0], p - 2, p);
    let mut out: Vec<u64> = s0.iter().map(|&c| mod_mul(c, scale, p)).collect();
    out.resize(modulus.len() - 1, 0);
    Ok(out)
}

/// Trial factorization: tests divisibility by every monic polynomial of
/// degree up to deg/2. Guarded against large search spaces.
fn fp_poly_is_irreducible(p: u64, f: &[u64]) -> Result<bool> {
    let deg = f.len() - 1;
    if deg == 1 {
        return Ok(true);
    }
    let half = deg / 2;
    let mut space: u64 = 1;
    for _ in 0..half {
        space = space.saturating_mul(p);
    }
    if space > 2_000_000 {
        return Err(Error::PreconditionViolated(
            "modulus too large for trial-factorization irreducibility check".into(),
        ));
    }
    for d in 1..=half {
        // All monic polynomials of degree d: counter over d low coefficients.
        let mut low = vec![0u64; d];
        loop {
            let mut g = low.clone();
            g.push(1);
            if fp_poly_rem(p, f, &g).is_empty() {
                return Ok(false);
            }
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
            if low.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Arc<FieldSpec> {
        FieldSpec::prime_field(2).unwrap()
    }

    fn f4() -> Arc<FieldSpec> {
        // F_4 = F_2[x]/(x^2 + x + 1)
        FieldSpec::new(2, vec![1, 1, 1]).unwrap()
    }

    #[test]
    fn char2_add() {
        let s = f2();
        let one = FieldElement::one(&s);
        assert!(one.add(&one).unwrap().is_zero());
    }

    #[test]
    fn f4_inverse_of_x_is_x_plus_one() {
        let s = f4();
        let x = FieldElement::from_coords(&s, &[0, 1]).unwrap();
        let x1 = FieldElement::from_coords(&s, &[1, 1]).unwrap();
        assert_eq!(x.inv().unwrap(), x1);
        assert!(x.mul(&x1).unwrap().is_one());
    }

    #[test]
    fn f4_exhaustive_multiplication_table() {
        // Oracle: the 4-element multiplication table, checked by group axioms
        // and by inverting every nonzero element.
        let s = f4();
        let elems: Vec<_> = s.iter_elements().collect();
        assert_eq!(elems.len(), 4);
        for a in &elems {
            for b in &elems {
                let ab = a.mul(b).unwrap();
                let ba = b.mul(a).unwrap();
                assert_eq!(ab, ba);
            }
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field_and_has_order_m() {
        let s = f4();
        let one = FieldElement::one(&s);
        assert_eq!(one.frobenius(), one);
        for el in s.iter_elements() {
            assert_eq!(el.frobenius_pow(s.m() as u32), el);
        }
        // Frobenius is additive and multiplicative.
        for a in s.iter_elements() {
            for b in s.iter_elements() {
                assert_eq!(
                    a.add(&b).unwrap().frobenius(),
                    a.frobenius().add(&b.frobenius()).unwrap()
                );
                assert_eq!(
                    a.mul(&b).unwrap().frobenius(),
                    a.frobenius().mul(&b.frobenius()).unwrap()
                );
            }
        }
    }

    #[test]
    fn inv_zero_is_division_by_zero() {
        let s = f2();
        assert_eq!(
            FieldElement::zero(&s).inv().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn mixed_specs_rejected() {
        let a = FieldElement::one(&f2());
        let b = FieldElement::one(&FieldSpec::prime_field(3).unwrap());
        assert!(matches!(a.add(&b), Err(Error::SpecMismatch(_))));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2.
        assert!(FieldSpec::new(2, vec![1, 0, 1]).is_err());
        // x^2 is reducible too.
        assert!(FieldSpec::new(3, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn nonprime_p_rejected() {
        assert!(FieldSpec::prime_field(4).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
    }

    #[test]
    fn element_display_round_trip() {
        let s = f4();
        for el in s.iter_elements() {
            let printed = el.to_string();
            assert_eq!(parse_element(&s, &printed).unwrap(), el);
        }
        let s3 = FieldSpec::prime_field(3).unwrap();
        assert_eq!(
            parse_element(&s3, "-1").unwrap(),
            FieldElement::from_u64(&s3, 2)
        );
    }

    #[test]
    fn sqrt_char2_and_odd() {
        let s = f4();
        for el in s.iter_elements() {
            let r = el.sqrt().unwrap().unwrap();
            assert_eq!(r.mul(&r).unwrap(), el);
        }
        let s5 = FieldSpec::prime_field(5).unwrap();
        // 4 = 2^2 is a QR; 2 and 3 are not QRs mod 5.
        assert!(FieldElement::from_u64(&s5, 4).sqrt().unwrap().is_some());
        assert!(FieldElement::from_u64(&s5, 2).sqrt().unwrap().is_none());
        assert!(FieldElement::from_u64(&s5, 3).sqrt().unwrap().is_none());
    }
}
