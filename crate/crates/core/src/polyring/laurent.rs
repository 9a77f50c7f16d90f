use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::series::HalfSeries;

/// Variable families.  The `*Inv` kinds are formal inverse alphabets: they
/// are independent symbols of positive degree, never computed reciprocals.
/// `Q` is the series variable; its exponents are doubled (`q^(1/2)` is
/// exponent 1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    X,
    XInv,
    Y,
    YInv,
    Z,
    ZInv,
    Q,
}

impl VarKind {
    pub fn prefix(self) -> &'static str {
        match self {
            VarKind::X => "x",
            VarKind::XInv => "xb",
            VarKind::Y => "y",
            VarKind::YInv => "yb",
            VarKind::Z => "z",
            VarKind::ZInv => "zb",
            VarKind::Q => "q",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub kind: VarKind,
    pub index: u32,
}

impl VarId {
    pub fn new(kind: VarKind, index: u32) -> Self {
        Self { kind, index }
    }

    pub fn q() -> Self {
        Self::new(VarKind::Q, 0)
    }

    /// The display name, e.g. `x1` for index 1; `q` has no index.  In JSON
    /// the `q` variable is emitted as `qh` ("half power of q"):
    /// `qh^k = q^(k/2)`.
    pub fn name(&self) -> String {
        if self.kind == VarKind::Q {
            "q".to_string()
        } else {
            format!("{}{}", self.kind.prefix(), self.index)
        }
    }

    pub fn json_name(&self) -> String {
        if self.kind == VarKind::Q {
            "qh".to_string()
        } else {
            self.name()
        }
    }
}

/// Convenience constructors for the standard alphabets (1-based index,
/// matching the display names: `xv(1)` is `x1`).
pub fn xv(i: u32) -> VarId {
    VarId::new(VarKind::X, i)
}
pub fn xbv(i: u32) -> VarId {
    VarId::new(VarKind::XInv, i)
}
pub fn yv(i: u32) -> VarId {
    VarId::new(VarKind::Y, i)
}
pub fn ybv(i: u32) -> VarId {
    VarId::new(VarKind::YInv, i)
}
pub fn zv(i: u32) -> VarId {
    VarId::new(VarKind::Z, i)
}
pub fn zbv(i: u32) -> VarId {
    VarId::new(VarKind::ZInv, i)
}

/// A monomial: sorted `(variable, exponent)` pairs, no zero exponents.
/// Exponents may be negative (genuine Laurent monomials).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(VarId, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId, exp: i64) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i64)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(VarId, i64)] {
        &self.0
    }

    pub fn exponent_of(&self, v: VarId) -> i64 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.0[i].1 + other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Degree under the given grading.
    pub fn degree(&self, grading: Grading) -> i64 {
        match grading {
            Grading::Total => self.0.iter().map(|(_, e)| e).sum(),
            Grading::QOnly => self
                .0
                .iter()
                .filter(|(v, _)| v.kind == VarKind::Q)
                .map(|(_, e)| e)
                .sum(),
        }
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.0.iter().any(|(w, _)| *w == v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if v.kind == VarKind::Q {
                write!(f, "{}", super::fmt_half_power(*e))?;
            } else if *e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Which monomial degree a truncation bound refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    /// Sum of all exponents, every variable weighted 1 (inverse-kind symbols
    /// included).  Only meaningful for polynomials with nonnegative
    /// exponents.
    Total,
    /// Doubled `q`-exponent only; the other variables are weightless.  Used
    /// for affine characters where only the energy grading is truncated.
    QOnly,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Trunc {
    pub grading: Grading,
    pub bound: i64,
}

impl Trunc {
    pub fn total(bound: i64) -> Self {
        Trunc {
            grading: Grading::Total,
            bound,
        }
    }

    pub fn q_only(bound2: i64) -> Self {
        Trunc {
            grading: Grading::QOnly,
            bound: bound2,
        }
    }

    pub(crate) fn keeps(&self, m: &Monomial) -> bool {
        m.degree(self.grading) <= self.bound
    }
}

fn combine_trunc(a: Option<Trunc>, b: Option<Trunc>) -> Option<Trunc> {
    match (a, b) {
        (None, t) | (t, None) => t,
        (Some(a), Some(b)) => {
            assert_eq!(
                a.grading, b.grading,
                "cannot combine polynomials truncated under different gradings"
            );
            Some(Trunc {
                grading: a.grading,
                bound: a.bound.min(b.bound),
            })
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0} occurs but has no assigned series")]
    Unassigned(String),
    #[error("series constant term is not a unit, cannot invert")]
    NonUnitConstant,
}

/// A sparse Laurent polynomial over `BigInt` with an optional truncation
/// context.  Equality compares terms only, not the truncation bookkeeping.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
    trunc: Option<Trunc>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(trunc: Option<Trunc>) -> Self {
        Self {
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(trunc: Option<Trunc>) -> Self {
        Self::constant(BigInt::one(), trunc)
    }

    pub fn constant(c: BigInt, trunc: Option<Trunc>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms, trunc }
    }

    pub fn var(v: VarId, trunc: Option<Trunc>) -> Self {
        Self::from_monomial(Monomial::var(v, 1), BigInt::one(), trunc)
    }

    pub fn from_monomial(m: Monomial, c: BigInt, trunc: Option<Trunc>) -> Self {
        let mut out = Self::zero(trunc);
        out.add_term(m, c);
        out
    }

    pub fn trunc(&self) -> Option<Trunc> {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds a single term in place, respecting the truncation.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if let Some(t) = &self.trunc {
            if !t.keeps(&m) {
                return;
            }
        }
        if let Some(entry) = self.terms.get_mut(&m) {
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(&m);
            }
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = combine_trunc(self.trunc, other.trunc);
        let mut out = Self::zero(trunc);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = combine_trunc(self.trunc, other.trunc);
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(trunc);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                if let Some(t) = &out.trunc {
                    if !t.keeps(&m) {
                        continue;
                    }
                }
                let entry = out.terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.trunc);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Re-truncates under the given context (also replaces the stored one).
    pub fn truncated(&self, trunc: Trunc) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trunc.keeps(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            trunc: Some(trunc),
        }
    }

    /// Forgets the truncation context (terms unchanged).
    pub fn without_trunc(&self) -> Self {
        Self {
            terms: self.terms.clone(),
            trunc: None,
        }
    }

    /// Sets a variable to zero: drops every term containing it.
    pub fn set_var_zero(&self, v: VarId) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains_var(v))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Renames variables.  The map must be injective on the variables that
    /// occur (checked by a collision assert).
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            let nm = Monomial::from_pairs(m.exponents().iter().map(|(v, e)| (f(*v), *e)));
            assert!(
                !out.terms.contains_key(&nm),
                "variable renaming must be injective"
            );
            out.terms.insert(nm, c.clone());
        }
        out
    }

    /// Replaces each formal-inverse symbol of kind `inv` (any index) by the
    /// corresponding base-kind variable with negated exponent, producing a
    /// genuine Laurent polynomial.  The truncation context is dropped (its
    /// grading would no longer mean anything).
    pub fn fold_inverse(&self, inv: VarKind, base: VarKind) -> Self {
        let mut out = Self::zero(None);
        for (m, c) in &self.terms {
            let nm = Monomial::from_pairs(m.exponents().iter().map(|(v, e)| {
                if v.kind == inv {
                    (VarId::new(base, v.index), -e)
                } else {
                    (*v, *e)
                }
            }));
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Groups terms by their exponent vector on `block`; values are the
    /// coefficient polynomials in the remaining variables (untruncated).
    pub fn split_by_block(&self, block: &[VarId]) -> BTreeMap<Vec<i64>, LaurentPoly> {
        let mut out: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<i64> = block.iter().map(|v| m.exponent_of(*v)).collect();
            let rest = Monomial::from_pairs(
                m.exponents()
                    .iter()
                    .filter(|(v, _)| !block.contains(v))
                    .copied(),
            );
            out.entry(key)
                .or_insert_with(|| LaurentPoly::zero(None))
                .add_term(rest, c.clone());
        }
        out
    }

    /// The coefficient (a polynomial in the other variables) of the given
    /// exponent vector on `block`.
    pub fn block_coefficient(&self, block: &[VarId], exps: &[i64]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(None);
        for (m, c) in &self.terms {
            if block.iter().zip(exps).all(|(v, e)| m.exponent_of(*v) == *e) {
                let rest = Monomial::from_pairs(
                    m.exponents()
                        .iter()
                        .filter(|(v, _)| !block.contains(v))
                        .copied(),
                );
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Substitutes a series for every variable.  An exponent `e < 0` uses the
    /// inverse of the assigned series, which must have unit constant term.
    /// The result is exact through the minimum order of the series actually
    /// used (exact, `i64::MAX`, if no variable occurs).
    pub fn specialize(
        &self,
        assignment: &BTreeMap<VarId, HalfSeries>,
    ) -> Result<HalfSeries, PolyError> {
        let mut order2 = i64::MAX;
        for (m, _) in &self.terms {
            for (v, _) in m.exponents() {
                match assignment.get(v) {
                    None => return Err(PolyError::Unassigned(v.name())),
                    Some(s) => order2 = order2.min(s.order2()),
                }
            }
        }
        let mut acc = HalfSeries::zero(order2);
        for (m, c) in &self.terms {
            let mut term = HalfSeries::constant(c.clone(), order2);
            for (v, e) in m.exponents() {
                let s = &assignment[v];
                let factor = if *e >= 0 {
                    s.pow(*e as u32)
                } else {
                    s.inv()?.pow((-e) as u32)
                };
                term = term.mul(&factor);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Sum of all coefficients (the evaluation at every variable = 1).
    pub fn sum_of_coeffs(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// First key (in ascending monomial order) where the two polynomials
    /// differ, with both coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let a = self.coeff(m);
            let b = other.coeff(m);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }

    /// Deterministic JSON rendering: a list of `{monomial, coeff}` objects in
    /// descending monomial order, coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| display_cmp(a.0, b.0));
        let mut arr = Vec::new();
        for (m, c) in ordered {
            let mut mono = serde_json::Map::new();
            for (v, e) in m.exponents() {
                mono.insert(v.json_name(), serde_json::Value::from(*e));
            }
            let mut obj = serde_json::Map::new();
            obj.insert("monomial".into(), serde_json::Value::Object(mono));
            obj.insert("coeff".into(), serde_json::Value::from(c.to_string()));
            arr.push(serde_json::Value::Object(obj));
        }
        serde_json::Value::Array(arr)
    }
}

/// Display order: descending lexicographic comparison of exponent vectors
/// over the union of variables (variables in `VarId` order, absent = 0), so
/// leading terms like `x1^2` print before `x1*y1` and constants before
/// negative powers.
fn display_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let (av, bv) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (0usize, 0usize);
    loop {
        match (av.get(i), bv.get(j)) {
            (None, None) => return std::cmp::Ordering::Equal,
            (Some(&(_, ea)), None) => return 0.cmp(&ea),
            (None, Some(&(_, eb))) => return eb.cmp(&0),
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va == vb {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i += 1;
                    j += 1;
                } else if va < vb {
                    return 0.cmp(&ea);
                } else {
                    return eb.cmp(&0);
                }
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| display_cmp(a.0, b.0));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
