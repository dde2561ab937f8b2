//! Weights in Dynkin-label coordinates and the BGG reducibility test.
//!
//! `ρ` is never stored: it is the weight with every label equal to 1, so
//! `(Λ+ρ)(h_i) = Λ(h_i) + 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

pub type Rational = BigRational;

/// A weight `Λ` given by its labels `Λ(h_i) = ⟨Λ, α_i^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    labels: Vec<Rational>,
}

impl Weight {
    pub fn new(labels: Vec<Rational>) -> Self {
        Self { labels }
    }

    pub fn from_ints(labels: &[i64]) -> Self {
        Self::new(labels.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational::zero(); rank])
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Labels of `Λ + ρ`.
    pub fn rho_shifted(&self) -> Vec<Rational> {
        self.labels.iter().map(|x| x + Rational::one()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.labels.iter().all(|x| x.is_integer())
    }

    /// All labels in `{0, 1, 2, …}`.
    pub fn is_dominant_integral(&self) -> bool {
        self.labels.iter().all(is_nonneg_integer)
    }

    pub(crate) fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.rank() != rs.rank() {
            return Err(Error::LengthMismatch {
                expected: rs.rank(),
                found: self.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn is_nonneg_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// A positive root `β` at which `(Λ+ρ, β^∨) = m ∈ {1, 2, …}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducibilityHit {
    pub beta: Root,
    pub m: BigInt,
}

fn hc_by_index(rs: &RootSystem, weight: &Weight, idx: usize) -> Rational {
    weight
        .labels()
        .iter()
        .zip(rs.coroot_by_index(idx))
        .filter(|(_, &c)| c != 0)
        .map(|(x, &c)| (x + Rational::one()) * Rational::from_integer(c.into()))
        .sum()
}

/// Harish-Chandra parameter `m_β = (Λ+ρ, β^∨)`.
pub fn hc_parameter(rs: &RootSystem, weight: &Weight, beta: &Root) -> Result<Rational> {
    weight.check_rank(rs)?;
    let idx = rs
        .root_index(beta)
        .ok_or_else(|| Error::NotARoot(beta.coeffs().to_vec()))?;
    Ok(hc_by_index(rs, weight, idx))
}

/// Harish-Chandra parameters at every positive root, in canonical root order.
pub fn hc_parameters(rs: &RootSystem, weight: &Weight) -> Result<Vec<Rational>> {
    weight.check_rank(rs)?;
    Ok((0..rs.positive_roots().len())
        .map(|i| hc_by_index(rs, weight, i))
        .collect())
}

/// The un-normalized pairing `(Λ+ρ, β)` under the symmetrized form.
///
/// Agrees with [`hc_parameter`] whenever `(β, β) = 2`; kept for comparing
/// conventions on the long/short roots of `B` and `C`.
pub fn raw_rho_pairing(rs: &RootSystem, weight: &Weight, beta: &Root) -> Result<Rational> {
    weight.check_rank(rs)?;
    if rs.root_index(beta).is_none() {
        return Err(Error::NotARoot(beta.coeffs().to_vec()));
    }
    // (Λ+ρ, α_j) = (Λ+ρ)(h_j) · d_j
    Ok(weight
        .labels()
        .iter()
        .zip(beta.coeffs())
        .zip(rs.symmetrizer())
        .map(|((x, &b), &d)| (x + Rational::one()) * Rational::from_integer((b * d).into()))
        .sum())
}

/// Every positive root where the Verma module `V^Λ` is reducible.
///
/// Empty exactly when `V^Λ` is irreducible.
pub fn reducibility_set(rs: &RootSystem, weight: &Weight) -> Result<Vec<ReducibilityHit>> {
    Ok(hc_parameters(rs, weight)?
        .into_iter()
        .zip(rs.positive_roots())
        .filter(|(m, _)| m.is_integer() && m.is_positive())
        .map(|(m, beta)| ReducibilityHit {
            beta: beta.clone(),
            m: m.to_integer(),
        })
        .collect())
}

/// `Λ − mβ` in Dynkin labels.
pub fn shift(rs: &RootSystem, weight: &Weight, hit: &ReducibilityHit) -> Result<Weight> {
    weight.check_rank(rs)?;
    let delta = rs.labels_of(hit.beta.coeffs());
    Ok(Weight::new(
        weight
            .labels()
            .iter()
            .zip(delta)
            .map(|(x, d)| x - Rational::from_integer(&hit.m * BigInt::from(d)))
            .collect(),
    ))
}
