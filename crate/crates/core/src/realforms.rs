//! Minimal parabolics `𝔭₀ = 𝔪₀ ⊕ 𝔞₀ ⊕ 𝔫₀` of the classical real forms and the
//! standard parabolic `P_S` of the complexification they correspond to.
//!
//! The catalog is one declarative [`FamilyRecord`] per family; [`verify`]
//! recomputes every closed-form dimension from the root data.

use std::fmt;

use crate::error::{Error, Result};
use crate::parabolic::{analyze, classify_subdiagram, ParabolicSubset};
use crate::rootsys::{Family, LieType, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealFormFamily {
    /// `sl(n,ℝ)`, params `[n]`
    SlR,
    /// `so(r,r)`, params `[r]`
    SoSplitEven,
    /// `so(r+1,r)`, params `[r]`
    SoSplitOdd,
    /// `sp(n,ℝ)`, params `[n]`
    SpR,
    /// `su(n,n)`, params `[n]`
    SuNN,
    /// `su*(2n)`, params `[n]`
    SuStar,
    /// `su(p,r)`, params `[p, r]`
    SuPR,
    /// `so(p,r)`, params `[p, r]`
    SoPR,
    /// `sp(p,r)`, params `[p, r]`
    SpPR,
    /// `so*(2n)`, params `[n]`
    SoStar,
}

/// A simple or abelian summand of the compact part `𝔪₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum M0Component {
    Su(usize),
    So(usize),
    Sp(usize),
    U1,
}

impl M0Component {
    /// Complexified semisimple part in Dynkin normal form.
    pub fn complex_types(self) -> Vec<LieType> {
        let t = |f, l| LieType::new(f, l).expect("positive rank");
        match self {
            M0Component::U1 => vec![],
            M0Component::Su(k) if k < 2 => vec![],
            M0Component::Su(k) => vec![t(Family::A, k - 1)],
            M0Component::Sp(0) => vec![],
            M0Component::Sp(1) => vec![t(Family::A, 1)],
            M0Component::Sp(k) => vec![t(Family::C, k)],
            M0Component::So(k) => match k {
                0..=2 => vec![],
                3 => vec![t(Family::A, 1)],
                4 => vec![t(Family::A, 1), t(Family::A, 1)],
                6 => vec![t(Family::A, 3)],
                k if k % 2 == 1 => vec![t(Family::B, k / 2)],
                k => vec![t(Family::D, k / 2)],
            },
        }
    }

    /// `u(1)` and `so(2)` contribute one dimension to the centre.
    pub fn is_abelian(self) -> bool {
        matches!(self, M0Component::U1 | M0Component::So(2))
    }
}

impl fmt::Display for M0Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M0Component::Su(k) => write!(f, "su({k})"),
            M0Component::So(k) => write!(f, "so({k})"),
            M0Component::Sp(k) => write!(f, "sp({k})"),
            M0Component::U1 => f.write_str("u(1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormSpec {
    pub family: RealFormFamily,
    pub params: Vec<usize>,
    pub m0_components: Vec<M0Component>,
    pub dim_a0: usize,
    pub dim_n0: usize,
    pub complex_type: LieType,
    pub complex_subset: ParabolicSubset,
    /// False for the split forms, whose `dim 𝔫₀` is filled in as `|Δ₊|`.
    pub dim_n0_stated: bool,
}

impl RealFormSpec {
    /// `su(2,2)`, `so*(8)`, `sp(4,ℝ)`, ...
    pub fn name(&self) -> String {
        let p = &self.params;
        match self.family {
            RealFormFamily::SlR => format!("sl({},R)", p[0]),
            RealFormFamily::SoSplitEven => format!("so({},{})", p[0], p[0]),
            RealFormFamily::SoSplitOdd => format!("so({},{})", p[0] + 1, p[0]),
            RealFormFamily::SpR => format!("sp({},R)", p[0]),
            RealFormFamily::SuNN => format!("su({},{})", p[0], p[0]),
            RealFormFamily::SuStar => format!("su*({})", 2 * p[0]),
            RealFormFamily::SuPR => format!("su({},{})", p[0], p[1]),
            RealFormFamily::SoPR => format!("so({},{})", p[0], p[1]),
            RealFormFamily::SpPR => format!("sp({},{})", p[0], p[1]),
            RealFormFamily::SoStar => format!("so*({})", 2 * p[0]),
        }
    }

    pub fn m0_semisimple_types(&self) -> Vec<LieType> {
        let mut v: Vec<LieType> = self
            .m0_components
            .iter()
            .flat_map(|c| c.complex_types())
            .collect();
        v.sort();
        v
    }

    pub fn m0_abelian_count(&self) -> usize {
        self.m0_components.iter().filter(|c| c.is_abelian()).count()
    }
}

type Params = [usize];

/// Declarative description of one family of real forms.
pub struct FamilyRecord {
    pub family: RealFormFamily,
    pub name: &'static str,
    pub arity: usize,
    /// Returns the violated rule, if any.
    pub constraint: fn(&Params) -> Option<&'static str>,
    pub complex_type: fn(&Params) -> (Family, usize),
    pub m0: fn(&Params) -> Vec<M0Component>,
    pub dim_a0: fn(&Params) -> usize,
    pub dim_n0: fn(&Params) -> usize,
    pub subset: fn(&Params) -> Vec<usize>,
    pub dim_n0_stated: bool,
}

fn odd_nodes(count: usize) -> Vec<usize> {
    (0..count).map(|i| 2 * i + 1).collect()
}

/// `{r+1, …, p−1}` for `su(p,r)` inside `A_{p+r−1}`.
pub fn su_pr_subset(p: usize, r: usize) -> Vec<usize> {
    (r + 1..p).collect()
}

/// `{r+1, …, ⌊(p+r)/2⌋}` for `so(p,r)`, except that a one-node tail in
/// `D_ℓ` (`p − r = 2`, `𝔪₀ = so(2)` abelian) is empty.
pub fn so_pr_subset(p: usize, r: usize) -> Vec<usize> {
    if (p + r).is_multiple_of(2) && p == r + 2 {
        return vec![];
    }
    (r + 1..=(p + r) / 2).collect()
}

fn repeat(c: M0Component, k: usize) -> Vec<M0Component> {
    vec![c; k]
}

pub static CATALOG: [FamilyRecord; 10] = [
    FamilyRecord {
        family: RealFormFamily::SlR,
        name: "sl(n,R)",
        arity: 1,
        constraint: |p| (p[0] < 2).then_some("sl(n,R) needs n >= 2"),
        complex_type: |p| (Family::A, p[0] - 1),
        m0: |_| vec![],
        dim_a0: |p| p[0] - 1,
        dim_n0: |p| p[0] * (p[0] - 1) / 2,
        subset: |_| vec![],
        dim_n0_stated: false,
    },
    FamilyRecord {
        family: RealFormFamily::SoSplitEven,
        name: "so(r,r)",
        arity: 1,
        constraint: |p| (p[0] < 2).then_some("so(r,r) needs r >= 2"),
        complex_type: |p| (Family::D, p[0]),
        m0: |_| vec![],
        dim_a0: |p| p[0],
        dim_n0: |p| p[0] * (p[0] - 1),
        subset: |_| vec![],
        dim_n0_stated: false,
    },
    FamilyRecord {
        family: RealFormFamily::SoSplitOdd,
        name: "so(r+1,r)",
        arity: 1,
        constraint: |p| (p[0] < 1).then_some("so(r+1,r) needs r >= 1"),
        complex_type: |p| (Family::B, p[0]),
        m0: |_| vec![],
        dim_a0: |p| p[0],
        dim_n0: |p| p[0] * p[0],
        subset: |_| vec![],
        dim_n0_stated: false,
    },
    FamilyRecord {
        family: RealFormFamily::SpR,
        name: "sp(n,R)",
        arity: 1,
        constraint: |p| (p[0] < 1).then_some("sp(n,R) needs n >= 1"),
        complex_type: |p| (Family::C, p[0]),
        m0: |_| vec![],
        dim_a0: |p| p[0],
        dim_n0: |p| p[0] * p[0],
        subset: |_| vec![],
        dim_n0_stated: false,
    },
    FamilyRecord {
        family: RealFormFamily::SuNN,
        name: "su(n,n)",
        arity: 1,
        constraint: |p| (p[0] < 2).then_some("su(n,n) needs n > 1"),
        complex_type: |p| (Family::A, 2 * p[0] - 1),
        m0: |p| repeat(M0Component::U1, p[0] - 1),
        dim_a0: |p| p[0],
        dim_n0: |p| p[0] * (2 * p[0] - 1),
        subset: |_| vec![],
        dim_n0_stated: true,
    },
    FamilyRecord {
        family: RealFormFamily::SuStar,
        name: "su*(2n)",
        arity: 1,
        constraint: |p| (p[0] < 2).then_some("su*(2n) needs n > 1"),
        complex_type: |p| (Family::A, 2 * p[0] - 1),
        m0: |p| repeat(M0Component::Su(2), p[0]),
        dim_a0: |p| p[0] - 1,
        dim_n0: |p| 2 * p[0] * (p[0] - 1),
        subset: |p| odd_nodes(p[0]),
        dim_n0_stated: true,
    },
    FamilyRecord {
        family: RealFormFamily::SuPR,
        name: "su(p,r)",
        arity: 2,
        constraint: |p| (!(p[0] > p[1] && p[1] >= 1)).then_some("su(p,r) needs p > r >= 1"),
        complex_type: |p| (Family::A, p[0] + p[1] - 1),
        m0: |p| {
            let mut v = vec![];
            if p[0] - p[1] >= 2 {
                v.push(M0Component::Su(p[0] - p[1]));
            }
            v.extend(repeat(M0Component::U1, p[1]));
            v
        },
        dim_a0: |p| p[1],
        dim_n0: |p| p[1] * (2 * p[0] - 1),
        subset: |p| su_pr_subset(p[0], p[1]),
        dim_n0_stated: true,
    },
    FamilyRecord {
        family: RealFormFamily::SoPR,
        name: "so(p,r)",
        arity: 2,
        constraint: |p| (!(p[0] > p[1] + 1 && p[1] >= 1)).then_some("so(p,r) needs p > r+1 and r >= 1"),
        complex_type: |p| {
            let n = p[0] + p[1];
            if n % 2 == 0 {
                (Family::D, n / 2)
            } else {
                (Family::B, (n - 1) / 2)
            }
        },
        m0: |p| vec![M0Component::So(p[0] - p[1])],
        dim_a0: |p| p[1],
        dim_n0: |p| p[1] * (p[0] - 1),
        subset: |p| so_pr_subset(p[0], p[1]),
        dim_n0_stated: true,
    },
    FamilyRecord {
        family: RealFormFamily::SpPR,
        name: "sp(p,r)",
        arity: 2,
        constraint: |p| (!(p[0] >= p[1] && p[1] >= 1)).then_some("sp(p,r) needs p >= r >= 1"),
        complex_type: |p| (Family::C, p[0] + p[1]),
        m0: |p| {
            let mut v = vec![];
            if p[0] > p[1] {
                v.push(M0Component::Sp(p[0] - p[1]));
            }
            v.extend(repeat(M0Component::Sp(1), p[1]));
            v
        },
        dim_a0: |p| p[1],
        dim_n0: |p| p[1] * (4 * p[0] - 1),
        subset: |p| {
            let (pp, r) = (p[0], p[1]);
            let mut s = odd_nodes(r);
            if pp > r {
                s.extend(2 * r + 1..=pp + r);
            }
            s
        },
        dim_n0_stated: true,
    },
    FamilyRecord {
        family: RealFormFamily::SoStar,
        name: "so*(2n)",
        arity: 1,
        constraint: |p| (p[0] < 2).then_some("so*(2n) needs n >= 2"),
        complex_type: |p| (Family::D, p[0]),
        m0: |p| {
            let r = p[0] / 2;
            let mut v = vec![];
            if p[0] % 2 == 1 {
                v.push(M0Component::So(2));
            }
            v.extend(repeat(M0Component::So(3), r));
            v
        },
        dim_a0: |p| p[0] / 2,
        dim_n0: |p| {
            let r = p[0] / 2;
            if p[0] % 2 == 0 {
                r * (4 * r - 3)
            } else {
                r * (4 * r + 1)
            }
        },
        // {1,3,…,n−1} for n = 2r, {1,3,…,n−2} for n = 2r+1: r odd nodes either way
        subset: |p| odd_nodes(p[0] / 2),
        dim_n0_stated: true,
    },
];

pub fn record(family: RealFormFamily) -> &'static FamilyRecord {
    CATALOG
        .iter()
        .find(|r| r.family == family)
        .expect("every family has a catalog record")
}

pub fn minimal_parabolic(family: RealFormFamily, params: &[usize]) -> Result<RealFormSpec> {
    let rec = record(family);
    if params.len() != rec.arity {
        return Err(Error::RealFormConstraint {
            family: rec.name,
            rule: if rec.arity == 1 {
                "expects one parameter"
            } else {
                "expects two parameters (p, r)"
            },
        });
    }
    if let Some(rule) = (rec.constraint)(params) {
        return Err(Error::RealFormConstraint {
            family: rec.name,
            rule,
        });
    }
    let (fam, rank) = (rec.complex_type)(params);
    let complex_type = LieType::new(fam, rank)?;
    Ok(RealFormSpec {
        family,
        params: params.to_vec(),
        m0_components: (rec.m0)(params),
        dim_a0: (rec.dim_a0)(params),
        dim_n0: (rec.dim_n0)(params),
        complex_type,
        complex_subset: ParabolicSubset::new((rec.subset)(params), rank)?,
        dim_n0_stated: rec.dim_n0_stated,
    })
}

/// Maps a family keyword and its parameters to a catalog entry.
///
/// `su p r`, `so p r` and `sp p r` dispatch to the split / equal-rank
/// families when the parameters coincide; `su*` and `so*` take `2n`.
pub fn resolve(keyword: &str, params: &[usize]) -> Result<(RealFormFamily, Vec<usize>)> {
    let bad = |family: &'static str, rule: &'static str| Error::RealFormConstraint { family, rule };
    match (keyword, params) {
        ("sl", [n]) => Ok((RealFormFamily::SlR, vec![*n])),
        ("sp", [n]) => Ok((RealFormFamily::SpR, vec![*n])),
        ("sp", [p, r]) => Ok((RealFormFamily::SpPR, vec![*p, *r])),
        ("su", [p, r]) if p == r => Ok((RealFormFamily::SuNN, vec![*p])),
        ("su", [p, r]) => Ok((RealFormFamily::SuPR, vec![*p, *r])),
        ("so", [p, r]) if p == r => Ok((RealFormFamily::SoSplitEven, vec![*r])),
        ("so", [p, r]) if *p == r + 1 => Ok((RealFormFamily::SoSplitOdd, vec![*r])),
        ("so", [p, r]) => Ok((RealFormFamily::SoPR, vec![*p, *r])),
        ("su*", [m]) if m % 2 == 0 => Ok((RealFormFamily::SuStar, vec![m / 2])),
        ("su*", [_]) => Err(bad("su*(2n)", "the argument is 2n and must be even")),
        ("so*", [m]) if m % 2 == 0 => Ok((RealFormFamily::SoStar, vec![m / 2])),
        ("so*", [_]) => Err(bad("so*(2n)", "the argument is 2n and must be even")),
        ("sl" | "sp" | "su" | "so" | "su*" | "so*", _) => {
            Err(bad("real form", "wrong number of parameters"))
        }
        _ => Err(bad(
            "real form",
            "unknown family; expected one of sl, su, so, sp, su*, so*",
        )),
    }
}

/// Every valid catalog entry whose complexification has rank `<= max_rank`,
/// in catalog order.
pub fn instances_up_to_rank(max_rank: usize) -> Vec<RealFormSpec> {
    let mut out = Vec::new();
    let bound = 2 * max_rank + 2;
    for rec in &CATALOG {
        let candidates: Vec<Vec<usize>> = if rec.arity == 1 {
            (1..=bound).map(|n| vec![n]).collect()
        } else {
            (1..=bound)
                .flat_map(|p| (1..=bound).map(move |r| vec![p, r]))
                .collect()
        };
        for params in candidates {
            if let Ok(spec) = minimal_parabolic(rec.family, &params) {
                if spec.complex_type.rank() <= max_rank {
                    out.push(spec);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub form: String,
    /// `|Δ₊(S)|` as computed in the complexification.
    pub nilradical_dim: usize,
    pub levi_type: Vec<LieType>,
    pub center_rank: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn format_types(types: &[LieType]) -> String {
    if types.is_empty() {
        return "0".to_string();
    }
    types
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

fn check<T: PartialEq + fmt::Debug>(name: &'static str, expected: T, actual: T, show: impl Fn(&T) -> String) -> Check {
    Check {
        name,
        passed: expected == actual,
        expected: show(&expected),
        actual: show(&actual),
    }
}

/// Recomputes the closed-form data of `spec` from the complex root system.
pub fn verify(spec: &RealFormSpec) -> VerificationReport {
    let rs = RootSystem::build(spec.complex_type);
    let data = analyze(&rs, &spec.complex_subset).expect("catalog subsets are in range");
    let levi = classify_subdiagram(&rs, &spec.complex_subset);
    let ss = spec.m0_semisimple_types();
    let ss_rank: usize = ss.iter().map(LieType::rank).sum();
    let abelian = spec.m0_abelian_count();
    let num = |x: &usize| x.to_string();

    let mut checks = vec![
        check("nilradical_dim", spec.dim_n0, data.nilradical_dim(), num),
        check("levi_type", ss, levi.clone(), |t| format_types(t)),
        check("center_rank", spec.dim_a0 + abelian, data.center_rank, num),
        check(
            "rank_bookkeeping",
            spec.complex_type.rank(),
            spec.dim_a0 + ss_rank + abelian,
            num,
        ),
    ];

    // substituting the split parameters into the generic formulas gives S = ∅
    let generic = match spec.family {
        RealFormFamily::SuNN => Some(su_pr_subset(spec.params[0], spec.params[0])),
        RealFormFamily::SoSplitEven => Some(so_pr_subset(spec.params[0], spec.params[0])),
        RealFormFamily::SoSplitOdd => Some(so_pr_subset(spec.params[0] + 1, spec.params[0])),
        RealFormFamily::SlR | RealFormFamily::SpR => Some(vec![]),
        _ => None,
    };
    if let Some(generic) = generic {
        let fmt_set = |v: &Vec<usize>| format!("{v:?}");
        checks.push(check(
            "split_consistency",
            spec.complex_subset.nodes().collect::<Vec<_>>(),
            generic.clone(),
            fmt_set,
        ));
        checks.push(check("split_is_borel", Vec::<usize>::new(), generic, fmt_set));
    }

    VerificationReport {
        form: spec.name(),
        nilradical_dim: data.nilradical_dim(),
        levi_type: levi,
        center_rank: data.center_rank,
        checks,
    }
}
