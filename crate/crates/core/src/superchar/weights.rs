//! The weight attached to a generalized partition at level l.
//!
//! Components are indexed by nonzero integers and half-integers; we store the
//! index doubled, so even keys are the integer rows and odd keys the
//! half-integer rows.  Only finitely many components are nonzero: reading the
//! columns of the diagram on the positive and nonpositive side gives the
//! integer components, reading the rows gives the half-integer ones.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde_json::json;

use crate::partitions::GeneralizedPartition;

/// A weight with finite support: map from doubled index (2r) to coefficient,
/// plus the charge (the level of the module).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub components: BTreeMap<i64, i64>,
    pub charge: i64,
}

fn clamp(k: i64) -> i64 {
    k.max(0)
}

/// Render a doubled index as a plain or half-integer label: 4 -> "2",
/// 1 -> "1/2", -3 -> "-3/2".
pub(crate) fn index_label(r2: i64) -> String {
    if r2 % 2 == 0 {
        (r2 / 2).to_string()
    } else {
        format!("{r2}/2")
    }
}

impl Weight {
    pub fn component(&self, r2: i64) -> i64 {
        self.components.get(&r2).copied().unwrap_or(0)
    }

    /// Energy of the weight: the sum of (index times coefficient).
    pub fn energy(&self) -> Rational64 {
        self.components
            .iter()
            .map(|(&r2, &c)| Rational64::new(r2 * c, 2))
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "charge": self.charge,
            "energy": self.energy().to_string(),
            "components": self
                .components
                .iter()
                .map(|(&r2, &c)| json!({ "index": index_label(r2), "value": c }))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0 (charge {})", self.charge);
        }
        let mut first = true;
        for (&r2, &c) in &self.components {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a == 1 {
                write!(f, "e({})", index_label(r2))?;
            } else {
                write!(f, "{a}*e({})", index_label(r2))?;
            }
        }
        write!(f, " (charge {})", self.charge)
    }
}

/// Weight of the level-l module attached to the generalized partition.
///
/// With <k> = max(k, 0), the component at integer index i > 0 is
/// <lambda'_i - i>, at integer index j <= 0 it is -<-lambda'_j + j>, at
/// half-integer index k + 1/2 it is <lambda_{k+1} - k>, and at index
/// -(k + 1/2) it is -<-lambda_{l-k} - k - 1>, with parts outside the declared
/// range read as zero.
pub fn weight_of(lambda: &GeneralizedPartition) -> Weight {
    let l = lambda.length() as i64;
    let mut components = BTreeMap::new();
    let mut set = |r2: i64, v: i64| {
        if v != 0 {
            components.insert(r2, v);
        }
    };
    let top = clamp(lambda.part1(1));
    for i in 1..=top {
        set(2 * i, clamp(lambda.column_length(i) - i));
    }
    let bottom = if l == 0 { 0 } else { lambda.part1(l).min(0) };
    for j in bottom..=0 {
        set(2 * j, -clamp(-lambda.column_length(j) + j));
    }
    for k in 0..l {
        set(2 * k + 1, clamp(lambda.part1(k + 1) - k));
        set(-(2 * k + 1), -clamp(-lambda.part1(l - k) - k - 1));
    }
    Weight {
        components,
        charge: l,
    }
}

/// Energy of the weight attached to `lambda`; always a half-integer.
pub fn h_of(lambda: &GeneralizedPartition) -> Rational64 {
    weight_of(lambda).energy()
}
