//! Oracle tests for the object and morphism translations between finite
//! lattices and the dual categories.

mod common;

use std::sync::Arc;

use common::{arc, b4_into_m4, names, pair_names, strings};
use latdual_core::enumerate::enumerate_lattices;
use latdual_core::fixtures::{boolean_square, chain, diamond};
use latdual_core::functors::{
    cg_from_filt, cg_from_filt_mor, cg_of, dh_of, dh_of_hom, dual, e_functor, filt_from_cg,
    filt_from_cg_mor, functor_d, functor_d_mor, functor_g, functor_g_mor, functor_hg,
    functor_hg_mor, functor_p, functor_p_inv, functor_u, functor_u_mor, nu_map, DualHoms, Duals,
    FunctorTag,
};
use latdual_core::spaces::{self, DhSpace};
use latdual_core::{
    enumerate_homs, lattice_iso, Category, DualMorphism, DualSpace, FiltMorphism, Lattice,
    LatticeHom, Relation,
};

fn duals(a: &Lattice) -> Duals {
    Duals::of(a).expect("functor chain succeeds on a valid lattice")
}

#[test]
fn functor_tags_cover_the_diagram() {
    assert_eq!(FunctorTag::ALL.len(), 11);
    let names: Vec<&str> = FunctorTag::ALL.iter().map(|t| t.name()).collect();
    for expected in [
        "DH-of-Lat",
        "G",
        "H",
        "U",
        "P",
        "P⁻¹",
        "D",
        "CG-of-Lat",
        "M",
        "Hcg",
        "E",
    ] {
        assert!(
            names.contains(&expected),
            "{expected} missing from {names:?}"
        );
    }
}

#[test]
fn dh_of_hom_identity_is_identity() {
    let a = arc(diamond(3));
    let id = dh_of_hom(&LatticeHom::identity(a.clone()));
    assert_eq!(DualMorphism::Dh(id), DualSpace::Dh(dh_of(&a)).identity());
}

#[test]
fn dh_of_hom_pulls_back_filters_and_ideals() {
    let alpha = b4_into_m4();
    let m = dh_of_hom(&alpha);
    let (m4, b4) = (alpha.target(), alpha.source());
    let c = m4.index_of("c").unwrap();
    // α⁻¹(↑c) = {1} = ↑1 and α⁻¹(↓c) = {0} = ↓0.
    assert_eq!(b4.label(m.x_map[c]), "1");
    assert_eq!(b4.label(m.y_map[c]), "0");
    let report = spaces::validate_morphism(
        &DualMorphism::Dh(m),
        &DualSpace::Dh(dh_of(m4)),
        &DualSpace::Dh(dh_of(b4)),
    )
    .unwrap();
    assert!(report.is_ok(), "{report}");
}

#[test]
fn functor_g_carriers() {
    let g = functor_g(&dh_of(&boolean_square())).unwrap();
    assert_eq!(g.x().labels(), strings(&["↑a", "↑b"]).as_slice());
    // Under the exact d-prime test ↑1 is excluded from the M4 carrier.
    let g = functor_g(&dh_of(&diamond(4))).unwrap();
    assert_eq!(
        g.x().labels(),
        strings(&["↑a", "↑b", "↑c", "↑d"]).as_slice()
    );
}

#[test]
fn functor_g_of_identity_is_identity() {
    let d = dh_of(&diamond(3));
    let g = functor_g(&d).unwrap();
    assert_eq!(functor_g_mor(&d, &d, &d.identity()), g.identity());
}

#[test]
fn functor_hg_restricts_to_maximal_points() {
    let h = functor_hg(&functor_g(&dh_of(&diamond(4))).unwrap()).unwrap();
    assert_eq!(h.x_labels().len(), 4);
    assert_eq!(h.y_labels().len(), 4);
    let (lx, ly) = h.derived_quasi_orders();
    assert_eq!(lx, Relation::identity(4));
    assert_eq!(ly, Relation::identity(4));
    for (x, y) in pair_names(h.x_labels(), h.y_labels(), h.relation()) {
        assert_ne!(x[3..], y[3..]);
    }
    assert_eq!(h.relation().len(), 12);

    let g = functor_g(&dh_of(&boolean_square())).unwrap();
    let h = functor_hg(&g).unwrap();
    assert_eq!(h.x_labels(), strings(&["↑a", "↑b"]).as_slice());
    assert_eq!(functor_hg_mor(&g, &g, &g.identity()), h.identity());
}

#[test]
fn functor_u_objects_and_identity() {
    let h = functor_hg(&functor_g(&dh_of(&boolean_square())).unwrap()).unwrap();
    let u = functor_u(&h).unwrap();
    assert_eq!(u.labels(), strings(&["(↑a,↓b)", "(↑b,↓a)"]).as_slice());
    assert_eq!(u.first_order(), &Relation::identity(2));
    assert_eq!(u.second_order(), &Relation::identity(2));
    assert_eq!(functor_u_mor(&h, &h, &h.identity()), u.identity());

    let u3 = functor_u(&functor_hg(&functor_g(&dh_of(&diamond(3))).unwrap()).unwrap()).unwrap();
    assert_eq!(u3.len(), 6);
}

#[test]
fn functor_p_relations() {
    let b4 = functor_p(&duals(&boolean_square()).urq);
    assert_eq!(b4.relation(), &Relation::identity(2));

    // (↑x,↓y) R (↑x′,↓y′) iff x ≠ y′.
    let m3 = functor_p(&duals(&diamond(3)).urq);
    let l = m3.labels();
    let atom = |s: &str, i: usize| {
        s.trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .nth(i)
            .unwrap()[3..]
            .to_string()
    };
    for a in 0..m3.len() {
        for b in 0..m3.len() {
            assert_eq!(
                m3.relation().contains(a, b),
                atom(&l[a], 0) != atom(&l[b], 1),
                "{} {}",
                l[a],
                l[b]
            );
        }
    }
}

#[test]
fn p_inverse_undoes_p() {
    for a in enumerate_lattices(5).unwrap() {
        let u = duals(&a).urq;
        assert_eq!(functor_p_inv(&functor_p(&u)), u, "{}", a.name());
        let p = functor_p(&u);
        assert_eq!(functor_p(&functor_p_inv(&p)), p, "{}", a.name());
    }
}

#[test]
fn functor_d_rebuilds_the_lattice() {
    for a in [boolean_square(), diamond(3)] {
        let u = duals(&a).urq;
        let d = functor_d(&u).unwrap();
        assert_eq!(d.x().len(), a.len());
        assert!(lattice_iso(&d.x().dual(), &a).is_some(), "{}", a.name());
        assert_eq!(functor_d_mor(&u, &u, &u.identity()).unwrap(), d.identity());
    }
}

#[test]
fn cg_of_small_lattices() {
    let m3 = cg_of(&diamond(3));
    assert_eq!(m3.len(), 3);
    assert_eq!(m3.subbasis().len(), 5);
    assert!(lattice_iso(m3.closed_family().unwrap().lattice(), &diamond(3)).is_some());

    let two = cg_of(&chain(2));
    assert_eq!(two.labels(), strings(&["↑1"]).as_slice());
    assert_eq!(two.subbasis().len(), 2);

    let b4 = boolean_square();
    let primes = b4.prime_filters();
    assert_eq!(
        cg_of(&b4).labels(),
        names(b4.filt().labels(), &primes).as_slice()
    );
}

#[test]
fn cg_from_filt_agrees_with_cg_of() {
    let a = diamond(3);
    let from_filt = cg_from_filt(&a.filt());
    let direct = cg_of(&a);
    assert_eq!(from_filt.labels(), direct.labels());
    assert_eq!(from_filt.subbasis(), direct.subbasis());
    assert_eq!(cg_from_filt(&chain(2).filt()).len(), 1);

    let x = a.filt();
    let id = FiltMorphism {
        map: (0..x.len()).collect(),
    };
    assert_eq!(cg_from_filt_mor(&x, &x, &id), from_filt.identity());
}

#[test]
fn filt_from_cg_rebuilds_the_filter_lattice() {
    let a = diamond(3);
    let c = cg_of(&a);
    assert!(lattice_iso(filt_from_cg(&c).unwrap().lattice(), &a.filt()).is_some());
    let point = cg_of(&chain(2));
    assert_eq!(filt_from_cg(&point).unwrap().len(), 2);
    let id = filt_from_cg_mor(&c, &c, &c.identity()).unwrap();
    assert_eq!(id.map, (0..id.map.len()).collect::<Vec<_>>());
}

#[test]
fn e_functor_examples() {
    let two = e_functor(&chain(2));
    assert_eq!(two.y().len(), 2);
    assert_eq!(two.relation().len(), 1);
    let m3 = e_functor(&diamond(3));
    assert!(m3.validate().is_ok());
    for x in 0..m3.x().len() {
        assert!(!m3.relation().contains(x, x), "x R ↑x must fail");
    }
}

#[test]
fn nu_sends_y_to_the_complement_of_its_preimage() {
    let d: DhSpace = e_functor(&diamond(3));
    let nu = nu_map(&d).unwrap();
    for (y, &k) in nu.iter().enumerate() {
        assert_eq!(d.x().principal_filter(k), d.relation().col(y).complement());
    }
}

fn star_identity_laws(space: &DualSpace, m: &DualMorphism, source: &DualSpace) {
    let id_t = space.identity();
    let id_s = source.identity();
    assert_eq!(&spaces::star_compose(&id_t, m, space).unwrap(), m);
    assert_eq!(&spaces::star_compose(m, &id_s, space).unwrap(), m);
}

#[test]
fn identities_are_neutral_for_composition() {
    let (a, b) = (arc(boolean_square()), arc(diamond(4)));
    let (da, db) = (duals(&a), duals(&b));
    let alpha = b4_into_m4();
    let homs = DualHoms::of(&alpha, &da, &db);
    for category in Category::ALL {
        star_identity_laws(
            &da.space(category),
            &homs.morphism(category),
            &db.space(category),
        );
    }
}

#[test]
fn dualization_turns_composition_around() {
    let lattices: Vec<Arc<Lattice>> = enumerate_lattices(4)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    let all_duals: Vec<Duals> = lattices.iter().map(|l| duals(l)).collect();
    let mut checked = 0;
    for (i, a) in lattices.iter().enumerate() {
        for (j, b) in lattices.iter().enumerate() {
            for alpha in enumerate_homs(a, b) {
                for (k, c) in lattices.iter().enumerate() {
                    for beta in enumerate_homs(b, c) {
                        let composite = alpha.then(&beta).unwrap();
                        let d_alpha = DualHoms::of(&alpha, &all_duals[i], &all_duals[j]);
                        let d_beta = DualHoms::of(&beta, &all_duals[j], &all_duals[k]);
                        let d_comp = DualHoms::of(&composite, &all_duals[i], &all_duals[k]);
                        for category in Category::ALL {
                            let lhs = spaces::star_compose(
                                &d_alpha.morphism(category),
                                &d_beta.morphism(category),
                                &all_duals[i].space(category),
                            )
                            .unwrap();
                            assert_eq!(lhs, d_comp.morphism(category), "{category}");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn relation_composition_is_contained_in_star_and_sometimes_strictly() {
    let lattices: Vec<Arc<Lattice>> = enumerate_lattices(5)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    let all_duals: Vec<Duals> = lattices.iter().map(|l| duals(l)).collect();
    let mut strict = 0;
    for (i, a) in lattices.iter().enumerate() {
        for (j, b) in lattices.iter().enumerate() {
            for alpha in enumerate_homs(a, b) {
                let d_alpha = DualHoms::of(&alpha, &all_duals[i], &all_duals[j]);
                for (k, c) in lattices.iter().enumerate() {
                    for beta in enumerate_homs(b, c) {
                        let d_beta = DualHoms::of(&beta, &all_duals[j], &all_duals[k]);
                        // d_beta: dual(C) → dual(B), then d_alpha: dual(B) → dual(A).
                        let star = spaces::star_compose(
                            &DualMorphism::Gvg(d_alpha.gvg.clone()),
                            &DualMorphism::Gvg(d_beta.gvg.clone()),
                            &all_duals[i].space(Category::Gvg),
                        )
                        .unwrap();
                        let star = star.as_pair().unwrap().clone();
                        let plain = d_beta.gvg.left.then(&d_alpha.gvg.left);
                        assert!(plain.is_subrelation(&star.left));
                        if plain != star.left {
                            strict += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(
        strict > 0,
        "no fixture separates relation composition from ⋆"
    );
}

#[test]
fn every_dual_hom_validates() {
    let lattices: Vec<Arc<Lattice>> = enumerate_lattices(4)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    let all_duals: Vec<Duals> = lattices.iter().map(|l| duals(l)).collect();
    for (i, a) in lattices.iter().enumerate() {
        for (j, b) in lattices.iter().enumerate() {
            for alpha in enumerate_homs(a, b) {
                let homs = DualHoms::of(&alpha, &all_duals[i], &all_duals[j]);
                for category in Category::ALL {
                    let report = spaces::validate_morphism(
                        &homs.morphism(category),
                        &all_duals[j].space(category),
                        &all_duals[i].space(category),
                    )
                    .unwrap();
                    assert!(
                        report.is_ok(),
                        "{} → {} in {category}: {report}",
                        a.name(),
                        b.name()
                    );
                }
            }
        }
    }
}

#[test]
fn distributive_collapse_on_b4() {
    let a = boolean_square();
    let d = duals(&a);
    assert_eq!(
        d.gvg.x().labels(),
        names(a.filt().labels(), &a.prime_filters()).as_slice()
    );
    assert_eq!(dual(&a, Category::Plo).unwrap(), DualSpace::Plo(d.plo));
}
