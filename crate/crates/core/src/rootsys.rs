//! Classical root systems with exact integer data.
//!
//! Conventions: simple roots are numbered along the Bourbaki chain (node `ℓ`
//! is the short end of `B_ℓ`, the long end of `C_ℓ`; `D_ℓ` forks at nodes
//! `ℓ−1, ℓ`). The Cartan matrix is `a_ij = ⟨α_j, α_i^∨⟩`, so row `i` of
//! `A·x` is the `i`-th Dynkin label of the root-basis vector `x`, and the
//! symmetrizer satisfies `d_i a_ij = d_j a_ji` with `(α_i, α_i) = 2 d_i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weights::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

/// A classical Cartan type `X_ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::D => 2,
            _ => 1,
        };
        if rank < min {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                constraint: match family {
                    Family::D => "D requires rank >= 2",
                    _ => "rank must be >= 1",
                },
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Closed-form count of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> BigUint {
        let l = self.rank;
        let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (BigUint::one() << l) * fact(l),
            Family::D => (BigUint::one() << (l - 1)) * fact(l),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadTypeString(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().ok_or_else(bad)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = digits.parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    /// Rejects the zero vector and vectors with mixed signs.
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let pos = coeffs.iter().any(|&c| c > 0);
        let neg = coeffs.iter().any(|&c| c < 0);
        if pos && neg {
            return Err(Error::MixedSignRoot(coeffs));
        }
        if !pos && !neg {
            return Err(Error::NotARoot(coeffs));
        }
        Ok(Self(coeffs))
    }

    pub fn simple(rank: usize, index: usize) -> Self {
        let mut v = vec![0; rank];
        v[index] = 1;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// Zero-based indices of the simple roots occurring in this root.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Writes the root as `α1+2α2+α3`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "α{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    /// Coefficients of each positive coroot in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C => {
            for i in 0..l.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            // chain 1 - ... - (ℓ-1), node ℓ hangs off node ℓ-2
            for i in 0..l - 2 {
                link(i, i + 1);
            }
            if l >= 3 {
                link(l - 3, l - 1);
            }
        }
    }
    if l >= 2 {
        match t.family {
            Family::B => a[l - 1][l - 2] = -2,
            Family::C => a[l - 2][l - 1] = -2,
            _ => {}
        }
    }
    a
}

fn symmetrizer(t: LieType) -> Vec<i64> {
    let l = t.rank;
    match t.family {
        Family::A | Family::D => vec![1; l],
        Family::B if l >= 2 => {
            let mut d = vec![2; l];
            d[l - 1] = 1;
            d
        }
        Family::C if l >= 2 => {
            let mut d = vec![1; l];
            d[l - 1] = 2;
            d
        }
        _ => vec![1; l],
    }
}

/// `⟨x, α_i^∨⟩` for every `i`, i.e. `A·x`.
fn labels_of(cartan: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    cartan
        .iter()
        .map(|row| row.iter().zip(x).map(|(a, c)| a * c).sum())
        .collect()
}

/// Level-by-level root-string closure starting from the simple roots.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: BTreeSet<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            let labels = labels_of(cartan, beta);
            for i in 0..l {
                // q = largest k with β − kα_i a root
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - labels[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next;
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    roots
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> Self {
        let cartan = cartan_matrix(lie_type);
        let symmetrizer = symmetrizer(lie_type);
        let roots = generate_positive_roots(&cartan);
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut rs = Self {
            lie_type,
            cartan,
            symmetrizer,
            positive_roots: roots.into_iter().map(Root).collect(),
            coroots: Vec::new(),
            index,
        };
        rs.coroots = rs
            .positive_roots
            .iter()
            .map(|beta| rs.coroot_in_coroot_basis(beta))
            .collect();
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then by descending coefficient
    /// vector, so that `α_1, …, α_ℓ` come first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, index: usize) -> &Root {
        &self.positive_roots[index]
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        self.index.get(beta.coeffs()).copied()
    }

    /// Membership in `Δ = Δ₊ ⊔ (−Δ₊)`.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// All roots, positive ones first.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(Root::negated));
        v
    }

    fn check_positive(&self, beta: &Root) -> Result<usize> {
        if beta.coeffs().len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: beta.coeffs().len(),
            });
        }
        self.root_index(beta)
            .ok_or_else(|| Error::NotARoot(beta.coeffs().to_vec()))
    }

    /// `⟨x, α_i^∨⟩` for an integer root-basis vector.
    pub fn labels_of(&self, x: &[i64]) -> Vec<i64> {
        labels_of(&self.cartan, x)
    }

    /// Invariant form on integer root-basis vectors.
    pub fn pairing_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += x[i] * self.symmetrizer[i] * self.cartan[i][j] * y[j];
            }
        }
        s
    }

    /// `Σ_ij x_i d_i a_ij y_j` on rational root-basis vectors.
    pub fn pairing(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let l = self.rank();
        for v in [x, y] {
            if v.len() != l {
                return Err(Error::LengthMismatch {
                    expected: l,
                    found: v.len(),
                });
            }
        }
        let mut s = Rational::zero();
        for i in 0..l {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..l {
                let b = self.symmetrizer[i] * self.cartan[i][j];
                if b != 0 {
                    s += &x[i] * Rational::from_integer(BigInt::from(b)) * &y[j];
                }
            }
        }
        Ok(s)
    }

    /// Root-basis coefficients of `β^∨ = 2β/(β,β)`.
    pub fn coroot_coeffs(&self, beta: &Root) -> Result<Vec<Rational>> {
        self.check_positive(beta).or_else(|e| {
            // negative roots have coroots too
            let neg = beta.negated();
            self.check_positive(&neg).map_err(|_| e)
        })?;
        let norm = self.pairing_int(beta.coeffs(), beta.coeffs());
        Ok(beta
            .coeffs()
            .iter()
            .map(|&c| Rational::new(BigInt::from(2 * c), BigInt::from(norm)))
            .collect())
    }

    fn coroot_in_coroot_basis(&self, beta: &Root) -> Vec<i64> {
        // α_i = d_i α_i^∨, so β^∨ = Σ (2 β_i d_i / (β,β)) α_i^∨
        let norm = self.pairing_int(beta.coeffs(), beta.coeffs());
        beta.coeffs()
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&c, &d)| {
                let num = 2 * c * d;
                debug_assert_eq!(num % norm, 0, "coroot coefficients are integral");
                num / norm
            })
            .collect()
    }

    /// Coefficients of `β^∨` in the simple-coroot basis (always integral).
    pub fn coroot_in_simple_coroots(&self, beta: &Root) -> Result<&[i64]> {
        let idx = self.check_positive(beta)?;
        Ok(&self.coroots[idx])
    }

    pub(crate) fn coroot_by_index(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn unit(l: usize, i: usize) -> Vec<Rational> {
        (0..l).map(|k| q((k == i) as i64)).collect()
    }

    #[test]
    fn a3_positive_roots() {
        let a3 = rs("A3");
        let got: Vec<Vec<i64>> = a3
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 1, 1],
                vec![1, 1, 1],
            ]
        );
    }

    #[test]
    fn a1_and_c3() {
        assert_eq!(rs("A1").positive_roots().len(), 1);
        let c3 = rs("C3");
        assert_eq!(c3.positive_roots().len(), 9);
        // highest root of C3 is 2α1+2α2+α3
        assert_eq!(c3.positive_roots().last().unwrap().coeffs(), &[2, 2, 1]);
        // and of B3 is α1+2α2+2α3
        assert_eq!(rs("B3").positive_roots().last().unwrap().coeffs(), &[1, 2, 2]);
    }

    #[test]
    fn rank_constraints() {
        assert!(matches!(
            LieType::new(Family::D, 1),
            Err(Error::InvalidRank { family: 'D', .. })
        ));
        assert!(LieType::new(Family::A, 0).is_err());
        assert!(LieType::new(Family::B, 1).is_ok());
        assert!("E6".parse::<LieType>().is_err());
        assert!("A".parse::<LieType>().is_err());
        assert!("A-1".parse::<LieType>().is_err());
        assert!("D1".parse::<LieType>().is_err());
    }

    #[test]
    fn root_rejects_mixed_signs() {
        assert!(matches!(Root::new(vec![1, -1]), Err(Error::MixedSignRoot(_))));
        assert!(Root::new(vec![0, 0]).is_err());
        assert!(Root::new(vec![-1, -1]).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let a3 = rs("A3");
        assert_eq!(a3.pairing(&unit(3, 0), &unit(3, 0)).unwrap(), q(2));
        assert_eq!(a3.pairing(&unit(3, 0), &unit(3, 2)).unwrap(), q(0));
        let b2 = rs("B2");
        assert_eq!(b2.symmetrizer(), &[2, 1]);
        assert_eq!(b2.pairing(&unit(2, 1), &unit(2, 1)).unwrap(), q(2));
        assert_eq!(b2.pairing(&unit(2, 0), &unit(2, 0)).unwrap(), q(4));
        assert!(matches!(
            b2.pairing(&unit(3, 0), &unit(2, 0)),
            Err(Error::LengthMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn coroot_examples() {
        let a3 = rs("A3");
        let top = Root::new(vec![1, 1, 1]).unwrap();
        assert_eq!(a3.coroot_coeffs(&top).unwrap(), vec![q(1), q(1), q(1)]);

        let b2 = rs("B2");
        // long roots of B2: α1 and α1+2α2
        for coeffs in [vec![1, 0], vec![1, 2]] {
            let beta = Root::new(coeffs.clone()).unwrap();
            let cv = b2.coroot_coeffs(&beta).unwrap();
            let halved: Vec<Rational> =
                coeffs.iter().map(|&c| Rational::new(c.into(), 2.into())).collect();
            assert_eq!(cv, halved);
            let as_q: Vec<Rational> = coeffs.iter().map(|&c| q(c)).collect();
            assert_eq!(b2.pairing(&as_q, &cv).unwrap(), q(2));
        }
        assert!(matches!(
            b2.coroot_coeffs(&Root::new(vec![2, 1]).unwrap()),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn simple_coroot_pairings_reproduce_cartan() {
        for s in ["A4", "B3", "C4", "D5", "D2", "D3"] {
            let r = rs(s);
            let l = r.rank();
            for i in 0..l {
                let cv = r.coroot_coeffs(r.simple_root(i)).unwrap();
                for j in 0..l {
                    assert_eq!(
                        r.pairing(&unit(l, j), &cv).unwrap(),
                        q(r.cartan()[i][j]),
                        "{s}: <α{}, α{}^∨>",
                        j + 1,
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn cartan_shape_and_symmetrizer() {
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            for l in 1..=8 {
                let Ok(t) = LieType::new(fam, l) else { continue };
                let r = RootSystem::build(t);
                let (a, d) = (r.cartan(), r.symmetrizer());
                for i in 0..l {
                    assert_eq!(a[i][i], 2);
                    for j in 0..l {
                        if i != j {
                            assert!(a[i][j] <= 0);
                        }
                        assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn d_small_ranks() {
        // D2 = A1 + A1, D3 = A3 with node 1 in the middle
        let d2 = rs("D2");
        assert_eq!(d2.cartan(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(d2.positive_roots().len(), 2);
        let d3 = rs("D3");
        assert_eq!(d3.cartan()[0], vec![2, -1, -1]);
        assert_eq!(d3.cartan()[1][2], 0);
    }

    #[test]
    fn weyl_orders() {
        let w = |s: &str| s.parse::<LieType>().unwrap().weyl_order();
        assert_eq!(w("A3"), BigUint::from(24u32));
        assert_eq!(w("B3"), BigUint::from(48u32));
        assert_eq!(w("D4"), BigUint::from(192u32));
    }

    #[test]
    fn display() {
        assert_eq!(Root::new(vec![1, 2, 0]).unwrap().to_string(), "α1+2α2");
        assert_eq!(Root::new(vec![0, -1, -1]).unwrap().to_string(), "-α2-α3");
        assert_eq!("C4".parse::<LieType>().unwrap().to_string(), "C4");
    }
}
