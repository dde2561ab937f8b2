//! The conformal algebra `su(2,2)` with complexification `sl(4) = A3`.
//!
//! Two families of elementary representations are covered: signatures
//! `[j₁, j₂; d]` induced from the maximal non-cuspidal parabolic (PVMs over
//! `S = {1,3}`) and cuspidal signatures `{n′, k, ε, ν′}` induced from the
//! maximal cuspidal parabolic (PVMs over `S = {2}`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::parabolic::{analyze, ParabolicSubset};
use crate::rootsys::{LieType, Root, RootSystem};
use crate::weights::{Rational, Weight};

pub fn sl4() -> RootSystem {
    RootSystem::build("A3".parse::<LieType>().expect("A3 is valid"))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// Harish-Chandra parameters of an `A3` weight, keyed by root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcSix {
    pub m1: Rational,
    pub m2: Rational,
    pub m3: Rational,
    pub m12: Rational,
    pub m23: Rational,
    pub m13: Rational,
}

impl HcSix {
    /// In canonical root order `α1, α2, α3, α12, α23, α13`.
    pub fn to_vec(&self) -> Vec<Rational> {
        vec![
            self.m1.clone(),
            self.m2.clone(),
            self.m3.clone(),
            self.m12.clone(),
            self.m23.clone(),
            self.m13.clone(),
        ]
    }

    pub fn from_slice(v: &[Rational]) -> Self {
        Self {
            m1: v[0].clone(),
            m2: v[1].clone(),
            m3: v[2].clone(),
            m12: v[3].clone(),
            m23: v[4].clone(),
            m13: v[5].clone(),
        }
    }

    /// `m12 = m1+m2`, `m23 = m2+m3`, `m13 = m1+m2+m3`.
    pub fn is_additive(&self) -> bool {
        self.m12 == &self.m1 + &self.m2
            && self.m23 == &self.m2 + &self.m3
            && self.m13 == &self.m1 + &self.m2 + &self.m3
    }
}

/// Signature `[j₁, j₂; d]` of the non-cuspidal series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureNC {
    j1: Rational,
    j2: Rational,
    d: Rational,
}

impl SignatureNC {
    pub fn new(j1: Rational, j2: Rational, d: Rational) -> Result<Self> {
        for (name, j) in [("j1", &j1), ("j2", &j2)] {
            let twice = j * q(2);
            if !twice.is_integer() || twice.is_negative() {
                return Err(Error::InvalidSignature(format!(
                    "{name} = {j} must be a nonnegative half-integer"
                )));
            }
        }
        Ok(Self { j1, j2, d })
    }

    pub fn j1(&self) -> &Rational {
        &self.j1
    }

    pub fn j2(&self) -> &Rational {
        &self.j2
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// Inverse of [`weight_nc`].
    pub fn from_weight(w: &Weight) -> Result<Self> {
        let l = w.labels();
        if l.len() != 3 {
            return Err(Error::LengthMismatch {
                expected: 3,
                found: l.len(),
            });
        }
        let j1 = &l[0] * half();
        let j2 = &l[2] * half();
        let d = q(1) - &l[1] - &j1 - &j2;
        Self::new(j1, j2, d)
    }
}

/// Cuspidal signature `{n′, k, ε, ν′}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureCusp {
    n_prime: BigInt,
    k: BigInt,
    eps: i8,
    nu_prime: Rational,
}

impl SignatureCusp {
    pub fn new(n_prime: BigInt, k: BigInt, eps: i8, nu_prime: Rational) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidSignature(format!("eps = {eps} must be +1 or -1")));
        }
        if k.is_negative() {
            return Err(Error::InvalidSignature(format!("k = {k} must be >= 0")));
        }
        Ok(Self {
            n_prime,
            k,
            eps,
            nu_prime,
        })
    }

    pub fn n_prime(&self) -> &BigInt {
        &self.n_prime
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// Fixes the discrete series of `so(2,1)`; enters no weight formula.
    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn nu_prime(&self) -> &Rational {
        &self.nu_prime
    }
}

/// Positive integers `(p, ν, n)` parametrizing the integral cuspidal case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuspTriple {
    pub p: i64,
    pub nu: i64,
    pub n: i64,
}

impl CuspTriple {
    pub fn new(p: i64, nu: i64, n: i64) -> Result<Self> {
        if p < 1 || nu < 1 || n < 1 {
            return Err(Error::InvalidSignature(format!(
                "(p, nu, n) = ({p}, {nu}, {n}) must all be positive integers"
            )));
        }
        Ok(Self { p, nu, n })
    }
}

/// PVM subset attached to the non-cuspidal series.
pub fn nc_subset() -> ParabolicSubset {
    ParabolicSubset::new([1, 3], 3).expect("valid for A3")
}

/// PVM subset attached to the cuspidal series.
pub fn cusp_subset() -> ParabolicSubset {
    ParabolicSubset::new([2], 3).expect("valid for A3")
}

/// `Λ = (2j₁, 1−d−j₁−j₂, 2j₂)`.
pub fn weight_nc(sig: &SignatureNC) -> Weight {
    Weight::new(vec![
        &sig.j1 * q(2),
        q(1) - &sig.d - &sig.j1 - &sig.j2,
        &sig.j2 * q(2),
    ])
}

/// Closed forms of the six Harish-Chandra parameters of `[j₁, j₂; d]`.
pub fn hc_nc(sig: &SignatureNC) -> HcSix {
    let (j1, j2, d) = (&sig.j1, &sig.j2, &sig.d);
    HcSix {
        m1: j1 * q(2) + q(1),
        m2: q(2) - d - j1 - j2,
        m3: j2 * q(2) + q(1),
        m12: q(3) - d + j1 - j2,
        m23: q(3) - d - j1 + j2,
        m13: q(4) - d + j1 + j2,
    }
}

/// Dynkin labels `(m₁, m₂, m₃)` of `Λ+ρ` for a cuspidal signature.
///
/// When `ν′` is an integer the labels must be integral, which needs
/// `k − ν′ + n′` even.
pub fn dynkin_cusp(sig: &SignatureCusp) -> Result<(Rational, Rational, Rational)> {
    let n = Rational::from_integer(sig.n_prime.clone());
    let k = Rational::from_integer(sig.k.clone());
    let nu = &sig.nu_prime;
    if nu.is_integer() {
        let s = (&k - nu + &n).to_integer();
        if !(&s % BigInt::from(2)).is_zero() {
            return Err(Error::InvalidSignature(format!(
                "k - nu' + n' = {s} must be even for integral nu'"
            )));
        }
    }
    Ok((
        (&k - nu + &n) * half(),
        -k.clone(),
        (&k - nu - &n) * half(),
    ))
}

/// All six cuspidal Harish-Chandra parameters, with `(m₁₂, m₂₃, m₁₃)` given
/// by their own closed forms rather than by summing.
pub fn hc_cusp(sig: &SignatureCusp) -> Result<HcSix> {
    let (m1, m2, m3) = dynkin_cusp(sig)?;
    let n = Rational::from_integer(sig.n_prime.clone());
    let k = Rational::from_integer(sig.k.clone());
    let nu = &sig.nu_prime;
    let hc = HcSix {
        m1,
        m2,
        m3,
        m12: (&n - &k - nu) * half(),
        m23: -(&k + nu + &n) * half(),
        m13: -nu.clone(),
    };
    debug_assert!(hc.is_additive());
    Ok(hc)
}

/// `Λ = (m₁−1, m₂−1, m₃−1)` for a cuspidal signature.
pub fn weight_cusp(sig: &SignatureCusp) -> Result<Weight> {
    let (m1, m2, m3) = dynkin_cusp(sig)?;
    Ok(Weight::new(
        [m1, m2, m3].into_iter().map(|m| m - Rational::one()).collect(),
    ))
}

/// `Λ = (−p−ν−1, ν−1, −n−ν−1)`.
pub fn weight_cusp_triple(t: &CuspTriple) -> Weight {
    Weight::from_ints(&[-t.p - t.nu - 1, t.nu - 1, -t.n - t.nu - 1])
}

/// `(m₁, m₂, m₃, m₁₂, m₂₃, m₁₃) = (−p−ν, ν, −n−ν, −p, −n, −p−n−ν)`.
pub fn hc_cusp_triple(t: &CuspTriple) -> HcSix {
    HcSix {
        m1: q(-t.p - t.nu),
        m2: q(t.nu),
        m3: q(-t.n - t.nu),
        m12: q(-t.p),
        m23: q(-t.n),
        m13: q(-t.p - t.n - t.nu),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolicKind {
    Minimal,
    MaximalCuspidal,
    MaximalNoncuspidal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su22Row {
    pub name: &'static str,
    pub kind: ParabolicKind,
    /// Real `𝔪` factor as written for `su(2,2)`.
    pub m: &'static str,
    /// Its complexification.
    pub m_complex: &'static str,
    pub cuspidal: bool,
    pub subset: ParabolicSubset,
    pub dim_a: usize,
    pub dim_n: usize,
    /// `|Δ₊(S)|` recomputed from `A3`.
    pub nilradical_dim: usize,
}

/// The three non-conjugate parabolics of `su(2,2)` and their complex
/// counterparts `P_∅ = 𝔟`, `P_{2}`, `P_{1,3}`.
pub fn su22_parabolic_table() -> Vec<Su22Row> {
    let rs = sl4();
    let rows = [
        ("p0", ParabolicKind::Minimal, "so(2)", "so(2,C)", true, vec![], 2, 6),
        (
            "p1",
            ParabolicKind::MaximalCuspidal,
            "so(2)+sl(2,R)",
            "so(2,C)+sl(2,C)",
            true,
            vec![2],
            1,
            5,
        ),
        (
            "p2",
            ParabolicKind::MaximalNoncuspidal,
            "so(3,1)",
            "so(4,C)",
            false,
            vec![1, 3],
            1,
            4,
        ),
    ];
    rows.into_iter()
        .map(|(name, kind, m, m_complex, cuspidal, nodes, dim_a, dim_n)| {
            let subset = ParabolicSubset::new(nodes, 3).expect("valid for A3");
            let nilradical_dim = analyze(&rs, &subset).expect("valid").nilradical_dim();
            Su22Row {
                name,
                kind,
                m,
                m_complex,
                cuspidal,
                subset,
                dim_a,
                dim_n,
                nilradical_dim,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruhatCase {
    Noncuspidal,
    Cuspidal,
}

/// `𝔪`-compact and non-compact positive roots of `A3`.
pub fn root_compactness(case: BruhatCase) -> (Vec<Root>, Vec<Root>) {
    let rs = sl4();
    let compact: &[usize] = match case {
        BruhatCase::Noncuspidal => &[0, 2],
        BruhatCase::Cuspidal => &[1],
    };
    rs.positive_roots()
        .iter()
        .cloned()
        .partition(|beta| beta.height() == 1 && compact.contains(&beta.support().into_iter().next().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::{is_ps_dominant, pvm_reducibility_set};
    use crate::weights::{hc_parameters, reducibility_set};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn nc(j1: Rational, j2: Rational, d: Rational) -> SignatureNC {
        SignatureNC::new(j1, j2, d).unwrap()
    }

    fn cusp(n: i64, k: i64, nu: Rational) -> SignatureCusp {
        SignatureCusp::new(n.into(), k.into(), 1, nu).unwrap()
    }

    #[test]
    fn weight_nc_examples() {
        assert_eq!(weight_nc(&nc(r(0, 1), r(0, 1), r(0, 1))), Weight::from_ints(&[0, 1, 0]));
        assert_eq!(weight_nc(&nc(r(1, 2), r(1, 2), r(2, 1))), Weight::from_ints(&[1, -2, 1]));
        assert_eq!(weight_nc(&nc(r(0, 1), r(0, 1), r(1, 1))), Weight::zero(3));
    }

    #[test]
    fn hc_nc_examples() {
        let hc = hc_nc(&nc(r(0, 1), r(0, 1), r(0, 1)));
        assert_eq!(hc.to_vec(), [1, 2, 1, 3, 3, 4].map(|x| r(x, 1)).to_vec());
        let hc = hc_nc(&nc(r(1, 2), r(1, 1), r(3, 1)));
        assert_eq!(hc.m12, r(-1, 2));
    }

    #[test]
    fn signature_validation() {
        assert!(SignatureNC::new(r(1, 3), r(0, 1), r(0, 1)).is_err());
        assert!(SignatureNC::new(r(-1, 2), r(0, 1), r(0, 1)).is_err());
        assert!(SignatureCusp::new(0.into(), 0.into(), 0, r(0, 1)).is_err());
        assert!(SignatureCusp::new(0.into(), (-1).into(), 1, r(0, 1)).is_err());
        assert!(CuspTriple::new(0, 1, 1).is_err());
    }

    #[test]
    fn dynkin_cusp_examples() {
        let z = dynkin_cusp(&cusp(0, 0, r(0, 1))).unwrap();
        assert_eq!(z, (r(0, 1), r(0, 1), r(0, 1)));
        let s = cusp(2, 1, r(-1, 1));
        assert_eq!(dynkin_cusp(&s).unwrap(), (r(2, 1), r(-1, 1), r(0, 1)));
        let hc = hc_cusp(&s).unwrap();
        assert_eq!(hc.m13, r(1, 1));
        assert!(hc.is_additive());
        // odd k − ν′ + n′ with integral ν′
        assert!(matches!(
            dynkin_cusp(&cusp(1, 1, r(1, 1))),
            Err(Error::InvalidSignature(_))
        ));
    }

    #[test]
    fn non_integral_nu_is_irreducible() {
        let rs = sl4();
        for nu in [r(1, 2), r(-7, 3), r(5, 4)] {
            for (n, k) in [(0, 0), (3, 2), (-2, 5)] {
                let w = weight_cusp(&cusp(n, k, nu.clone())).unwrap();
                assert!(reducibility_set(&rs, &w).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn cusp_weight_matches_closed_forms() {
        let rs = sl4();
        for (n, k, nu) in [(2, 1, -1), (0, 2, 4), (-3, 0, 1), (1, 3, 0)] {
            let s = cusp(n, k, r(nu, 1));
            let hc = hc_parameters(&rs, &weight_cusp(&s).unwrap()).unwrap();
            assert_eq!(hc, hc_cusp(&s).unwrap().to_vec());
        }
    }

    #[test]
    fn cusp_triple_examples() {
        let rs = sl4();
        let t = CuspTriple::new(1, 1, 1).unwrap();
        let w = weight_cusp_triple(&t);
        assert_eq!(w, Weight::from_ints(&[-3, 0, -3]));
        let hc = HcSix::from_slice(&hc_parameters(&rs, &w).unwrap());
        assert_eq!((hc.m12.clone(), hc.m23.clone(), hc.m13.clone()), (r(-1, 1), r(-1, 1), r(-3, 1)));
        assert!(is_ps_dominant(&w, &cusp_subset()));
        assert!(pvm_reducibility_set(&rs, &cusp_subset(), &w).unwrap().is_empty());
    }

    #[test]
    fn weight_nc_round_trips() {
        for (j1, j2, d) in [(0, 0, 0), (1, 3, 7), (4, 1, -5)] {
            let s = nc(r(j1, 2), r(j2, 2), r(d, 3));
            let w = weight_nc(&s);
            assert!(is_ps_dominant(&w, &nc_subset()));
            assert_eq!(SignatureNC::from_weight(&w).unwrap(), s);
        }
    }

    #[test]
    fn table_rows() {
        let t = su22_parabolic_table();
        let got: Vec<(usize, usize, usize)> =
            t.iter().map(|row| (row.dim_a, row.dim_n, row.nilradical_dim)).collect();
        assert_eq!(got, vec![(2, 6, 6), (1, 5, 5), (1, 4, 4)]);
        assert_eq!(t[1].kind, ParabolicKind::MaximalCuspidal);
        assert!(!t[2].cuspidal);
    }

    #[test]
    fn compact_roots_are_levi_roots() {
        let rs = sl4();
        let table = su22_parabolic_table();
        for (case, row, size) in [
            (BruhatCase::Noncuspidal, &table[2], 2),
            (BruhatCase::Cuspidal, &table[1], 1),
        ] {
            let (compact, noncompact) = root_compactness(case);
            assert_eq!(compact.len(), size);
            assert_eq!(compact.len() + noncompact.len(), 6);
            assert_eq!(compact, analyze(&rs, &row.subset).unwrap().levi_roots);
        }
    }
}
