use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::PolyError;

/// A formal power series in `q^(1/2)` over `BigInt`, stored with doubled
/// exponents: the key `k` holds the coefficient of `q^(k/2)`.
///
/// `order2` is the doubled exponent through which the series is exact; all
/// stored keys are `<= order2`.  Keys are normally nonnegative; an explicit
/// [`HalfSeries::shift`] (a prefactor `q^(d/2)`) may introduce a finite
/// principal part, and the arithmetic tracks exactness correctly either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfSeries {
    coeffs: BTreeMap<i64, BigInt>,
    order2: i64,
}

impl HalfSeries {
    pub fn zero(order2: i64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            order2,
        }
    }

    pub fn one(order2: i64) -> Self {
        Self::constant(BigInt::one(), order2)
    }

    pub fn constant(c: BigInt, order2: i64) -> Self {
        let mut s = Self::zero(order2);
        s.add_coeff(0, c);
        s
    }

    /// `c * q^(e2/2)`.
    pub fn monomial(e2: i64, c: BigInt, order2: i64) -> Self {
        let mut s = Self::zero(order2);
        s.add_coeff(e2, c);
        s
    }

    pub fn order2(&self) -> i64 {
        self.order2
    }

    pub fn coeff(&self, e2: i64) -> BigInt {
        self.coeffs.get(&e2).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored exponent; for an (apparently) zero series the first
    /// unknown exponent `order2 + 1`.
    pub fn valuation(&self) -> i64 {
        self.coeffs
            .keys()
            .next()
            .copied()
            .unwrap_or_else(|| self.order2.saturating_add(1))
    }

    pub fn add_coeff(&mut self, e2: i64, c: BigInt) {
        if c.is_zero() || e2 > self.order2 {
            return;
        }
        if let Some(entry) = self.coeffs.get_mut(&e2) {
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(&e2);
            }
        } else {
            self.coeffs.insert(e2, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order2.min(other.order2));
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_coeff(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            order2: self.order2,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.order2);
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
            order2: self.order2,
        }
    }

    /// Cauchy product.  For series with nonnegative valuation the result is
    /// exact through `min(order2)`, the general rule being
    /// `min(a.order2 + val(b), b.order2 + val(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let order2 = self
            .order2
            .saturating_add(other.valuation())
            .min(other.order2.saturating_add(self.valuation()));
        let mut out = Self::zero(order2);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_coeff(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order2);
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

    /// Multiplicative inverse of a series with constant term `+1` or `-1`
    /// and no principal part.
    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.valuation() < 0 {
            return Err(PolyError::NonUnitConstant);
        }
        let c0 = self.coeff(0);
        if c0 != BigInt::one() && c0 != -BigInt::one() {
            return Err(PolyError::NonUnitConstant);
        }
        let mut inv = Self::zero(self.order2);
        inv.add_coeff(0, c0.clone());
        // with c0 = ±1, c0^{-1} = c0; b_k = -c0 * sum_{j=1..k} a_j b_{k-j}
        for k in 1..=self.order2.max(0) {
            let mut acc = BigInt::zero();
            for (j, aj) in self.coeffs.range(1..=k) {
                acc += aj * inv.coeff(k - j);
            }
            if !acc.is_zero() {
                inv.add_coeff(k, -&c0 * acc);
            }
        }
        Ok(inv)
    }

    /// Multiplies by `q^(d2/2)`: exponents and the exactness bound both move.
    pub fn shift(&self, d2: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + d2, c.clone())).collect(),
            order2: self.order2.saturating_add(d2),
        }
    }

    /// Drops information above `order2` (no-op if already coarser).
    pub fn restricted(&self, order2: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .range(..=order2)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            order2: self.order2.min(order2),
        }
    }

    /// Equality through the common exactness order.
    pub fn eq_through(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// First exponent (through the common order) where the coefficients
    /// differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(i64, BigInt, BigInt)> {
        let bound = self.order2.min(other.order2);
        let mut keys: Vec<i64> = self
            .coeffs
            .range(..=bound)
            .map(|(k, _)| *k)
            .chain(other.coeffs.range(..=bound).map(|(k, _)| *k))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for e in keys {
            let a = self.coeff(e);
            let b = other.coeff(e);
            if a != b {
                return Some((e, a, b));
            }
        }
        None
    }

    /// `(1 - q^(k2/2))^(-1)` exact through `order2` (requires `k2 > 0`).
    pub fn geometric(k2: i64, order2: i64) -> Self {
        assert!(k2 > 0);
        let mut s = Self::zero(order2);
        let mut e = 0;
        while e <= order2 {
            s.add_coeff(e, BigInt::one());
            e += k2;
        }
        s
    }

    /// `1 + q^(k2/2)` as an exact-through-`order2` series.
    pub fn one_plus(k2: i64, order2: i64) -> Self {
        let mut s = Self::one(order2);
        s.add_coeff(k2, BigInt::one());
        s
    }

    /// Deterministic JSON rendering: doubled order and an ascending list of
    /// `[doubled exponent, coeff]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| serde_json::Value::Array(vec![(*e).into(), c.to_string().into()]))
            .collect();
        serde_json::json!({ "order2": self.order2, "terms": arr })
    }
}

impl fmt::Display for HalfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
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
            if *e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", super::fmt_half_power(*e))?;
            } else {
                write!(f, "{}*{}", abs, super::fmt_half_power(*e))?;
            }
        }
        Ok(())
    }
}
