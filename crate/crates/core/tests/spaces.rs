//! Oracle tests for the dual spaces: modal operators, derived subsets,
//! stable families and validators.

mod common;

use common::{names, pair_names, strings};
use latdual_core::fixtures::{boolean_square, chain, diamond};
use latdual_core::functors::{cg_of, dh_of, dual, functor_g, functor_hg, functor_p, functor_u};
use latdual_core::spaces::{self, x0_y0, Polarity};
use latdual_core::{
    lattice_iso, Category, DualSpace, Modality, PloSpace, Relation, Subset, UrqSpace,
};
use proptest::prelude::*;

#[test]
fn box_of_empty_relation_is_everything() {
    let r = Relation::empty(3, 2);
    for s in Subset::all(2) {
        assert!(spaces::modal(&r, &s, Modality::Box).unwrap().is_full());
    }
}

#[test]
fn black_diamond_is_direct_image() {
    let r = Relation::from_pairs(2, 2, [(0, 1)]);
    let image = spaces::modal(&r, &Subset::singleton(2, 0), Modality::BlackDiamond).unwrap();
    assert_eq!(image, Subset::singleton(2, 1));
}

#[test]
fn modal_rejects_subset_of_wrong_side() {
    let r = Relation::empty(3, 2);
    assert!(spaces::modal(&r, &Subset::empty(3), Modality::Box).is_err());
}

#[test]
fn principal_filters_of_m3_are_box_black_diamond_closed() {
    let d = dh_of(&diamond(3));
    let r = d.relation();
    for k in 0..d.x().len() {
        let u = d.x().principal_filter(k);
        assert_eq!(r.boxed(&r.black_diamond(&u)), u, "↑{}", d.x().label(k));
    }
}

#[test]
fn galois_maps_on_trivial_arguments() {
    let u =
        functor_u(&functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap()).unwrap();
    let n = u.len();
    assert!(u.galois(Polarity::Phi, &Subset::empty(n)).is_full());
    assert!(u.galois(Polarity::Psi, &Subset::full(n)).is_empty());
}

#[test]
fn phi_swaps_the_two_points_of_the_b4_urquhart_space() {
    let u =
        functor_u(&functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap()).unwrap();
    let ab = u.labels().iter().position(|l| l == "(↑a,↓b)").unwrap();
    let ba = u.labels().iter().position(|l| l == "(↑b,↓a)").unwrap();
    assert_eq!(u.phi(&Subset::singleton(2, ab)), Subset::singleton(2, ba));
}

#[test]
fn derived_orders_of_a_total_relation_are_not_antisymmetric() {
    let h = latdual_core::HgSpace::new(
        strings(&["p", "q"]),
        strings(&["y"]),
        Relation::from_fn(2, 1, |_, _| true),
    )
    .unwrap();
    let (lx, _) = h.derived_quasi_orders();
    assert_eq!(lx.len(), 4);
    assert!(h.derived_orders().is_err());
    assert_eq!(
        h.validate().violated_clause(),
        Some("hg.derived-orders-are-partial")
    );
}

#[test]
fn derived_orders_on_m3_and_b4_hartung_spaces_are_equality() {
    for a in [diamond(3), boolean_square()] {
        let h = functor_hg(&functor_g(&dh_of(&a)).unwrap()).unwrap();
        let (lx, _) = h.derived_quasi_orders();
        assert_eq!(lx, Relation::identity(h.x_labels().len()), "{}", a.name());
    }
    let h = functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap();
    assert_eq!(h.x_labels(), strings(&["↑a", "↑b"]).as_slice());
}

#[test]
fn plo_quasi_orders() {
    let p = PloSpace::new(strings(&["p", "q", "r"]), Relation::identity(3)).unwrap();
    let (q1, q2) = p.quasi_orders();
    assert_eq!(q1, Relation::identity(3));
    assert_eq!(q2, Relation::identity(3));

    let b4 = functor_p(
        &functor_u(&functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap()).unwrap(),
    );
    assert_eq!(b4.len(), 2);
    assert_eq!(b4.quasi_orders().0, Relation::identity(2));
    assert_eq!(b4.quasi_orders().1, Relation::identity(2));

    // On M3, z ≤₁ z′ iff both pairs share their first coordinate.
    let m3 = functor_p(
        &functor_u(&functor_hg(&functor_g(&dh_of(&diamond(3))).unwrap()).unwrap()).unwrap(),
    );
    let first = |l: &str| l.split(',').next().unwrap().to_string();
    let (q1, _) = m3.quasi_orders();
    for a in 0..m3.len() {
        for b in 0..m3.len() {
            assert_eq!(
                q1.contains(a, b),
                first(&m3.labels()[a]) == first(&m3.labels()[b])
            );
        }
    }
}

#[test]
fn x0_of_small_dh_spaces() {
    let two = dh_of(&chain(2));
    let (x0, _) = x0_y0(two.x().poset(), two.relation(), two.y().poset());
    assert_eq!(names(two.x().labels(), &x0), strings(&["↑1"]));

    let m4 = dh_of(&diamond(4));
    let (x0, _) = m4.x0_y0();
    assert_eq!(
        names(m4.x().labels(), &x0),
        strings(&["↑a", "↑b", "↑c", "↑d"])
    );

    let (x0, y0) = x0_y0(two.x().poset(), &Relation::empty(2, 2), two.y().poset());
    assert!(x0.is_empty() && y0.is_empty());
}

#[test]
fn maximal_pairs_of_small_hartung_spaces() {
    let h = functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap();
    let z: Vec<(String, String)> = h
        .maximal_pairs()
        .into_iter()
        .map(|(a, b)| (h.x_labels()[a].clone(), h.y_labels()[b].clone()))
        .collect();
    assert_eq!(
        z,
        vec![("↑a".into(), "↓b".into()), ("↑b".into(), "↓a".into())]
    );

    let h = functor_hg(&functor_g(&dh_of(&diamond(3))).unwrap()).unwrap();
    let z = h.maximal_pairs();
    assert_eq!(z.len(), 6);
    assert!(z
        .iter()
        .all(|&(a, b)| h.x_labels()[a][3..] != h.y_labels()[b][3..]));

    let empty = h.with_relation(Relation::empty(3, 3)).unwrap();
    assert!(empty.maximal_pairs().is_empty());
}

#[test]
fn stable_families_of_fixtures() {
    let u = dual(&boolean_square(), Category::Urq).unwrap();
    let fam = u.stable_family().unwrap();
    assert_eq!(fam.len(), 4);
    assert!(lattice_iso(fam.lattice(), &boolean_square()).is_some());

    let g = dual(&diamond(3), Category::Gvg).unwrap();
    let fam = g.stable_family().unwrap();
    assert_eq!(fam.len(), 5);
    assert!(lattice_iso(fam.lattice(), &diamond(3)).is_some());

    let point = PloSpace::new(strings(&["z"]), Relation::identity(1)).unwrap();
    let fam = DualSpace::Plo(point).stable_family().unwrap();
    assert_eq!(fam.members(), &[Subset::empty(1), Subset::full(1)]);
}

#[test]
fn delta_closure_on_m3() {
    let c = cg_of(&diamond(3));
    let n = c.len();
    let mut meet_of_closed = Subset::full(n);
    for a in c.closed_sets() {
        meet_of_closed.intersect_with(&a);
    }
    assert_eq!(c.delta_closure(&Subset::empty(n)), meet_of_closed);
    assert!(c.delta_closure(&Subset::full(n)).is_full());
    let a = c.labels().iter().position(|l| l == "↑a").unwrap();
    assert_eq!(
        c.delta_closure(&Subset::singleton(n, a)),
        Subset::singleton(n, a)
    );
}

#[test]
fn every_dual_of_small_lattices_validates() {
    for a in latdual_core::enumerate::enumerate_lattices(5).unwrap() {
        for category in Category::ALL {
            let report = dual(&a, category).unwrap().validate();
            assert!(report.is_ok(), "{} in {category}: {report}", a.name());
        }
    }
}

#[test]
fn deleting_a_pair_from_gvg_m3_breaks_an_axiom() {
    let DualSpace::Gvg(g) = dual(&diamond(3), Category::Gvg).unwrap() else {
        unreachable!()
    };
    for (a, b) in g.relation().pairs() {
        let mut r = g.relation().clone();
        r.remove(a, b);
        let report = g.with_relation(r).unwrap().validate();
        assert!(
            report.violated_clause().is_some(),
            "deleting ({a}, {b}) went unnoticed"
        );
    }
}

#[test]
fn non_reflexive_plo_relation_is_rejected() {
    let p = PloSpace::new(strings(&["p", "q"]), Relation::from_pairs(2, 2, [(0, 0)])).unwrap();
    assert_eq!(
        p.validate().violated_clause(),
        Some("plo.relation-is-reflexive")
    );
}

#[test]
fn doubly_ordered_violation_is_named() {
    let full = Relation::from_fn(2, 2, |_, _| true);
    let u = UrqSpace::new(strings(&["p", "q"]), full.clone(), full).unwrap();
    assert_eq!(u.validate().violated_clause(), Some("urq.doubly-ordered"));
}

#[test]
fn identities_validate_in_every_category() {
    for a in [
        chain(3),
        boolean_square(),
        diamond(3),
        latdual_core::fixtures::pentagon(),
    ] {
        for category in Category::ALL {
            let s = dual(&a, category).unwrap();
            let report = spaces::validate_morphism(&s.identity(), &s, &s).unwrap();
            assert!(report.is_ok(), "{} {category}: {report}", a.name());
        }
    }
}

#[test]
fn validate_morphism_rejects_category_mismatch() {
    let a = boolean_square();
    let g = dual(&a, Category::Gvg).unwrap();
    let h = dual(&a, Category::Hg).unwrap();
    assert!(spaces::validate_morphism(&g.identity(), &g, &h).is_err());
}

#[test]
fn adding_a_pair_to_a_gvg_morphism_is_rejected() {
    let s = dual(&diamond(3), Category::Gvg).unwrap();
    let DualSpace::Gvg(g) = &s else {
        unreachable!()
    };
    let id = g.identity();
    for a in 0..id.left.left_len() {
        for b in 0..id.left.right_len() {
            if id.left.contains(a, b) {
                continue;
            }
            let mut left = id.left.clone();
            left.insert(a, b);
            let m = latdual_core::DualMorphism::Gvg(latdual_core::RelationPair {
                left,
                right: id.right.clone(),
            });
            assert!(!spaces::validate_morphism(&m, &s, &s).unwrap().is_ok());
        }
    }
}

#[test]
fn dh_relation_of_two_and_b4() {
    let d = dh_of(&chain(2));
    assert_eq!(
        pair_names(d.x().labels(), d.y().labels(), d.relation()),
        vec![("↑1".to_string(), "↓0".to_string())]
    );
    // Sixteen pairs minus the nine comparable ones `x ≤ y`.
    let b4 = boolean_square();
    let incomparable = (0..4)
        .flat_map(|x| (0..4).map(move |y| (x, y)))
        .filter(|&(x, y)| !b4.leq(x, y))
        .count();
    assert_eq!(incomparable, 7);
    assert_eq!(dh_of(&b4).relation().len(), incomparable);
}

fn arb_relation(max: usize) -> impl Strategy<Value = Relation> {
    (1..=max, 1..=max).prop_flat_map(|(l, r)| {
        proptest::collection::vec(any::<bool>(), l * r)
            .prop_map(move |bits| Relation::from_fn(l, r, |a, b| bits[a * r + b]))
    })
}

proptest! {
    #[test]
    fn black_diamond_is_left_adjoint_to_box(r in arb_relation(5), a_bits in any::<u8>(), b_bits in any::<u8>()) {
        let a = Subset::from_predicate(r.left_len(), |i| a_bits & (1 << i) != 0);
        let b = Subset::from_predicate(r.right_len(), |i| b_bits & (1 << i) != 0);
        let lhs = r.black_diamond(&a).is_subset(&b);
        let rhs = a.is_subset(&r.boxed(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diamond_is_left_adjoint_to_black_box(r in arb_relation(5), a_bits in any::<u8>(), b_bits in any::<u8>()) {
        let a = Subset::from_predicate(r.left_len(), |i| a_bits & (1 << i) != 0);
        let b = Subset::from_predicate(r.right_len(), |i| b_bits & (1 << i) != 0);
        prop_assert_eq!(r.diamond(&b).is_subset(&a), b.is_subset(&r.black_box(&a)));
    }
}
