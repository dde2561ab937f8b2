mod oracle;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use verma_core::weights::{hc_parameters, reducibility_set};
use verma_core::{Family, LieType, Rational, RootSystem, Weight};

const FAMILIES: [(Family, char, usize); 4] = [
    (Family::A, 'A', 1),
    (Family::B, 'B', 1),
    (Family::C, 'C', 1),
    (Family::D, 'D', 2),
];

fn systems(max_rank: usize) -> impl Iterator<Item = (char, usize, RootSystem)> {
    FAMILIES.into_iter().flat_map(move |(f, c, lo)| {
        (lo..=max_rank).map(move |r| (c, r, RootSystem::build(LieType::new(f, r).unwrap())))
    })
}

/// Ratio between the crate's invariant form and the vector-model dot product,
/// read off from the last simple root.
fn norm_scale(fam: char, l: usize, rs: &RootSystem) -> Rational {
    let last = rs.simple_root(l - 1).coeffs();
    let v = oracle::to_vector(fam, l, last);
    Rational::new(rs.pairing_int(last, last).into(), oracle::dot(&v, &v).into())
}

fn closed_form_count(family: char, l: usize) -> usize {
    match family {
        'A' => l * (l + 1) / 2,
        'B' | 'C' => l * l,
        _ => l * (l - 1),
    }
}

#[test]
fn root_counts_match_closed_forms_through_rank_12() {
    for (fam, l, rs) in systems(12) {
        assert_eq!(rs.positive_roots().len(), closed_form_count(fam, l), "{fam}{l}");
        assert_eq!(rs.all_roots().len(), 2 * closed_form_count(fam, l));
    }
}

#[test]
fn positive_roots_agree_with_vector_model() {
    for (fam, l, rs) in systems(12) {
        let ours: BTreeSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|b| oracle::to_vector(fam, l, b.coeffs()))
            .collect();
        assert_eq!(ours, oracle::positive_roots(fam, l), "{fam}{l}");
    }
}

#[test]
fn cartan_matrices_agree_with_vector_model() {
    for (fam, l, rs) in systems(12) {
        assert_eq!(rs.cartan(), oracle::cartan(fam, l).as_slice(), "{fam}{l}");
    }
}

#[test]
fn pairing_is_symmetric_and_matches_dot_product() {
    for (fam, l, rs) in systems(7) {
        let scale = norm_scale(fam, l, &rs);
        let roots = rs.all_roots();
        for a in &roots {
            for b in &roots {
                let ab = rs.pairing_int(a.coeffs(), b.coeffs());
                assert_eq!(ab, rs.pairing_int(b.coeffs(), a.coeffs()));
                let va = oracle::to_vector(fam, l, a.coeffs());
                let vb = oracle::to_vector(fam, l, b.coeffs());
                assert_eq!(
                    Rational::from_integer(ab.into()),
                    &scale * Rational::from_integer(oracle::dot(&va, &vb).into()),
                    "{fam}{l} {a} {b}"
                );
            }
        }
    }
}

#[test]
fn every_root_pairs_to_two_with_its_coroot() {
    let two = Rational::from_integer(BigInt::from(2));
    for (fam, l, rs) in systems(10) {
        let scale = norm_scale(fam, l, &rs);
        for beta in rs.positive_roots() {
            let cor = rs.coroot_coeffs(beta).unwrap();
            let b: Vec<Rational> = beta
                .coeffs()
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect();
            assert_eq!(rs.pairing(&b, &cor).unwrap(), two, "{fam}{l} {beta}");

            // β^∨ = 2β/(β,β), with (β,β) rescaled from the vector model
            let v = oracle::to_vector(fam, l, beta.coeffs());
            let nn = oracle::dot(&v, &v);
            let simple = oracle::simple_roots(fam, l);
            for k in 0..v.len() {
                let lhs: Rational = cor
                    .iter()
                    .zip(&simple)
                    .map(|(c, a)| c * Rational::from_integer(a[k].into()))
                    .sum();
                assert_eq!(lhs, Rational::new((2 * v[k]).into(), nn.into()) / &scale);
            }
        }
    }
}

#[test]
fn rho_has_all_labels_one() {
    for (fam, l, rs) in systems(12) {
        let mut two_rho = vec![0i64; l];
        for b in rs.positive_roots() {
            for (x, c) in two_rho.iter_mut().zip(b.coeffs()) {
                *x += c;
            }
        }
        assert_eq!(rs.labels_of(&two_rho), vec![2; l], "{fam}{l}");

        let simple = oracle::simple_roots(fam, l);
        let two_rho_vec = oracle::to_vector(fam, l, &two_rho);
        for a in &simple {
            assert_eq!(oracle::dot(&two_rho_vec, a), oracle::dot(a, a), "{fam}{l}");
        }
    }
}

#[test]
fn trivial_weight_hits_every_positive_root() {
    for (fam, l, rs) in systems(8) {
        let zero = Weight::zero(l);
        let hc = hc_parameters(&rs, &zero).unwrap();
        let hits = reducibility_set(&rs, &zero).unwrap();
        assert_eq!(hits.len(), rs.positive_roots().len());

        let two_rho = oracle::to_vector(
            fam,
            l,
            &rs.positive_roots().iter().fold(vec![0; l], |acc, b| {
                acc.iter().zip(b.coeffs()).map(|(x, y)| x + y).collect()
            }),
        );
        for ((beta, m), hit) in rs.positive_roots().iter().zip(&hc).zip(&hits) {
            let v = oracle::to_vector(fam, l, beta.coeffs());
            // ⟨ρ, β^∨⟩ = 2(ρ,β)/(β,β) = (2ρ,β)/(β,β)
            let expected = Rational::new(oracle::dot(&two_rho, &v).into(), oracle::dot(&v, &v).into());
            assert_eq!(m, &expected, "{fam}{l} {beta}");
            assert!(expected.is_integer() && expected >= Rational::one());
            assert_eq!(&hit.beta, beta);
            assert_eq!(Rational::from_integer(hit.m.clone()), expected);
        }
        if fam == 'A' {
            // simply laced: m equals the height
            for (beta, m) in rs.positive_roots().iter().zip(&hc) {
                assert_eq!(m.to_integer().to_i64(), Some(beta.height()));
            }
        }
    }
}

#[test]
fn weyl_orders_match_orbit_sizes() {
    for (f, fam, lo) in FAMILIES {
        for l in lo..=4 {
            let t = LieType::new(f, l).unwrap();
            assert_eq!(
                t.weyl_order().to_usize().unwrap(),
                oracle::weyl_order(fam, l),
                "{t}"
            );
        }
    }
}
