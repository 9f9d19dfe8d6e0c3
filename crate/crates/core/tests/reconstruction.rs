//! Oracle tests for lattice reconstruction, the isomorphism witnesses and
//! the natural isomorphisms.

mod common;

use std::sync::Arc;

use common::{arc, b4_into_m4, strings};
use latdual_core::enumerate::enumerate_lattices;
use latdual_core::fixtures::{boolean_square, chain, diamond, pentagon};
use latdual_core::functors::{dh_of, dual, e_functor, e_functor_mor, filt_of_hom, DualHoms, Duals};
use latdual_core::reconstruction::{
    check_naturality, check_naturality_with, check_roundtrip, check_triangle, hom_from_morphism,
    iso_witness, lattice_from, nat_component, NaturalKind, WitnessKind,
};
use latdual_core::spaces;
use latdual_core::{
    enumerate_homs, lattice_iso, Category, DualMorphism, DualSpace, Error, Lattice, LatticeHom,
    PloSpace, Relation,
};

#[test]
fn lattice_from_examples() {
    let m3 = lattice_from(&DualSpace::Dh(dh_of(&diamond(3)))).unwrap();
    assert!(lattice_iso(&m3, &diamond(3)).is_some());
    let b4 = lattice_from(&dual(&boolean_square(), Category::Gvg).unwrap()).unwrap();
    assert!(lattice_iso(&b4, &boolean_square()).is_some());
    let point = PloSpace::new(strings(&["z"]), Relation::identity(1)).unwrap();
    let two = lattice_from(&DualSpace::Plo(point)).unwrap();
    assert!(lattice_iso(&two, &chain(2)).is_some());
}

#[test]
fn lattice_from_rejects_invalid_spaces() {
    let bad = PloSpace::new(strings(&["p", "q"]), Relation::empty(2, 2)).unwrap();
    assert!(matches!(
        lattice_from(&DualSpace::Plo(bad)),
        Err(Error::NotValidated(_))
    ));
}

#[test]
fn roundtrip_for_every_lattice_up_to_six_elements() {
    let lattices = enumerate_lattices(6).unwrap();
    assert_eq!(lattices.len(), 25);
    for a in &lattices {
        for category in Category::ALL {
            let rt = check_roundtrip(a, category)
                .unwrap_or_else(|e| panic!("{} in {category}: {e}", a.name()));
            assert_eq!(rt.reconstructed.len(), a.len());
        }
    }
}

#[test]
fn identity_morphism_gives_identity_hom() {
    for a in [boolean_square(), diamond(3), pentagon()] {
        for category in Category::ALL {
            let s = dual(&a, category).unwrap();
            let hom = hom_from_morphism(&s.identity(), &s, &s).unwrap();
            assert!(hom.is_identity(), "{} in {category}", a.name());
        }
    }
}

#[test]
fn reconstructed_homs_recover_the_original() {
    // L(dual(α)) composed with the round-trip isomorphisms equals α.  Both
    // lattices are rigid, so the isomorphisms found by search are unique.
    let alpha = LatticeHom::new(arc(chain(3)), arc(pentagon()), vec![0, 1, 4]).unwrap();
    let (a, b) = (alpha.source().clone(), alpha.target().clone());
    let (da, db) = (Duals::of(&a).unwrap(), Duals::of(&b).unwrap());
    let homs = DualHoms::of(&alpha, &da, &db);
    for category in Category::ALL {
        let (sa, sb) = (da.space(category), db.space(category));
        let rebuilt = hom_from_morphism(&homs.morphism(category), &sb, &sa).unwrap();
        let iso_a = check_roundtrip(&a, category).unwrap().iso;
        let iso_b = check_roundtrip(&b, category).unwrap().iso;
        for x in 0..a.len() {
            assert_eq!(
                rebuilt.apply(iso_a[x]),
                iso_b[alpha.apply(x)],
                "{category} at {}",
                a.label(x)
            );
        }
    }
}

#[test]
fn box_of_a_gvg_morphism_preserves_joins() {
    let alpha = b4_into_m4();
    let (da, db) = (
        Duals::of(alpha.source()).unwrap(),
        Duals::of(alpha.target()).unwrap(),
    );
    let m = DualMorphism::Gvg(DualHoms::of(&alpha, &da, &db).gvg);
    let (sa, sb) = (da.space(Category::Gvg), db.space(Category::Gvg));
    let hom = hom_from_morphism(&m, &sb, &sa).unwrap();
    let (from, to) = (hom.source(), hom.target());
    for u in 0..from.len() {
        for v in 0..from.len() {
            assert_eq!(
                hom.apply(from.join(u, v)),
                to.join(hom.apply(u), hom.apply(v))
            );
        }
    }
}

#[test]
fn witness_sizes() {
    let gamma = iso_witness(WitnessKind::Gamma, &DualSpace::Dh(dh_of(&diamond(3)))).unwrap();
    assert_eq!(gamma.table.len(), 5);
    let mu = iso_witness(
        WitnessKind::Mu,
        &dual(&boolean_square(), Category::Hg).unwrap(),
    )
    .unwrap();
    assert_eq!(mu.table.len(), 4);
    let xi = iso_witness(WitnessKind::Xi, &dual(&chain(2), Category::Urq).unwrap()).unwrap();
    assert_eq!(xi.table.len(), 2);
}

#[test]
fn witness_rejects_wrong_category() {
    assert!(iso_witness(WitnessKind::Gamma, &dual(&chain(2), Category::Urq).unwrap()).is_err());
}

fn category_of(kind: NaturalKind) -> Category {
    match kind {
        NaturalKind::Epsilon | NaturalKind::Kappa => Category::Dh,
        NaturalKind::Zeta => Category::Gvg,
        NaturalKind::Eta => Category::Hg,
        NaturalKind::Theta => Category::Urq,
    }
}

#[test]
fn components_are_isomorphisms() {
    for a in enumerate_lattices(5).unwrap() {
        for kind in NaturalKind::ALL {
            let space = if kind == NaturalKind::Kappa {
                DualSpace::Dh(e_functor(&a))
            } else {
                dual(&a, category_of(kind)).unwrap()
            };
            nat_component(kind, &space).unwrap_or_else(|e| panic!("{kind} at {}: {e}", a.name()));
        }
    }
}

#[test]
fn epsilon_on_two_is_a_pair_of_bijections() {
    let c = nat_component(NaturalKind::Epsilon, &DualSpace::Dh(dh_of(&chain(2)))).unwrap();
    let DualMorphism::Dh(f) = &c.forward else {
        unreachable!()
    };
    let mut xs = f.x_map.clone();
    xs.sort();
    assert_eq!(xs, vec![0, 1]);
    let mut ys = f.y_map.clone();
    ys.sort();
    assert_eq!(ys, vec![0, 1]);
}

#[test]
fn epsilon_on_m3_sends_a_filter_to_the_pairs_above_it() {
    let a = diamond(3);
    let d = Duals::of(&a).unwrap();
    let c = nat_component(NaturalKind::Epsilon, &DualSpace::Dh(d.dh.clone())).unwrap();
    let DualMorphism::Dh(f) = &c.forward else {
        unreachable!()
    };
    let lc = d.urq.left_closed().unwrap();
    let member = lc.member(f.x_map[a.index_of("a").unwrap()]);
    let labels: Vec<&str> = member.iter().map(|z| d.urq.labels()[z].as_str()).collect();
    assert_eq!(labels, vec!["(↑a,↓b)", "(↑a,↓c)"]);
}

#[test]
fn kappa_on_m3_pairs_identity_with_nu() {
    let d = e_functor(&diamond(3));
    let c = nat_component(NaturalKind::Kappa, &DualSpace::Dh(d.clone())).unwrap();
    let DualMorphism::Dh(f) = &c.forward else {
        unreachable!()
    };
    assert_eq!(f.x_map, (0..d.x().len()).collect::<Vec<_>>());
    for (y, &k) in f.y_map.iter().enumerate() {
        assert_eq!(d.x().principal_filter(k), d.relation().col(y).complement());
    }
}

#[test]
fn identity_squares_commute() {
    for a in [boolean_square(), diamond(3), pentagon()] {
        for kind in NaturalKind::ALL {
            let space = if kind == NaturalKind::Kappa {
                DualSpace::Dh(e_functor(&a))
            } else {
                dual(&a, category_of(kind)).unwrap()
            };
            assert_eq!(
                check_naturality(kind, &space.identity(), &space, &space).unwrap(),
                None
            );
        }
    }
}

#[test]
fn epsilon_square_for_the_b4_embedding() {
    let alpha = b4_into_m4();
    let (da, db) = (
        Duals::of(alpha.source()).unwrap(),
        Duals::of(alpha.target()).unwrap(),
    );
    let m = DualMorphism::Dh(DualHoms::of(&alpha, &da, &db).dh);
    let report = check_naturality(
        NaturalKind::Epsilon,
        &m,
        &DualSpace::Dh(db.dh),
        &DualSpace::Dh(da.dh),
    )
    .unwrap();
    assert_eq!(report, None);
}

#[test]
fn corrupted_component_breaks_the_square() {
    let space = DualSpace::Dh(dh_of(&diamond(3)));
    let good = nat_component(NaturalKind::Epsilon, &space).unwrap();
    let mut bad = good.clone();
    let DualMorphism::Dh(f) = &mut bad.forward else {
        unreachable!()
    };
    f.x_map.swap(1, 2);
    let report = check_naturality_with(&space.identity(), &good, &bad).unwrap();
    assert!(report.is_some());
}

#[test]
fn squares_and_triangles_commute_for_small_homs() {
    let lattices: Vec<Arc<Lattice>> = enumerate_lattices(4)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    let duals: Vec<Duals> = lattices.iter().map(|l| Duals::of(l).unwrap()).collect();
    for (i, a) in lattices.iter().enumerate() {
        for (j, b) in lattices.iter().enumerate() {
            for alpha in enumerate_homs(a, b) {
                let homs = DualHoms::of(&alpha, &duals[i], &duals[j]);
                for kind in [
                    NaturalKind::Epsilon,
                    NaturalKind::Zeta,
                    NaturalKind::Eta,
                    NaturalKind::Theta,
                ] {
                    let c = category_of(kind);
                    let m = homs.morphism(c);
                    let res =
                        check_naturality(kind, &m, &duals[j].space(c), &duals[i].space(c)).unwrap();
                    assert_eq!(res, None, "{kind}: {} → {}", a.name(), b.name());
                }
                for kind in WitnessKind::TRIANGLES {
                    let c = match kind {
                        WitnessKind::Gamma => Category::Dh,
                        WitnessKind::Delta => Category::Gvg,
                        WitnessKind::Mu => Category::Hg,
                        _ => Category::Urq,
                    };
                    let res = check_triangle(
                        kind,
                        &homs.morphism(c),
                        &duals[j].space(c),
                        &duals[i].space(c),
                    )
                    .unwrap();
                    assert_eq!(res, None, "{kind}: {} → {}", a.name(), b.name());
                }
            }
        }
    }
}

#[test]
fn kappa_squares_commute_for_filter_maps() {
    let lattices: Vec<Arc<Lattice>> = enumerate_lattices(4)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    for a in &lattices {
        for b in &lattices {
            for alpha in enumerate_homs(a, b) {
                // α⁻¹: Filt(B) → Filt(A) is a coherent map, which E lifts to
                // a DH-morphism between the E-spaces.
                let (fa, fb) = (a.filt(), b.filt());
                let filt = filt_of_hom(&alpha);
                let m = DualMorphism::Dh(e_functor_mor(&fb, &fa, &filt).unwrap());
                let (sb, sa) = (DualSpace::Dh(e_functor(&fb)), DualSpace::Dh(e_functor(&fa)));
                assert!(spaces::validate_morphism(&m, &sb, &sa).unwrap().is_ok());
                assert_eq!(
                    check_naturality(NaturalKind::Kappa, &m, &sb, &sa).unwrap(),
                    None
                );
            }
        }
    }
}
