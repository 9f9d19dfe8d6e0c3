//! The natural isomorphisms `ε: 1 → DUHG` (DH), `ζ: 1 → GDUH` (GvG),
//! `η: 1 → HGDU` (Hg), `θ: 1 → UHGD` (Urq) and `κ: 1 → E∘(X-part)` (DH),
//! with their inverses and naturality squares.

use std::fmt;

use crate::error::{Error, Result};
use crate::functors::chain::{gvg_embeddings, hg_embeddings};
use crate::functors::{
    e_functor, e_functor_mor, functor_d, functor_g, functor_hg, functor_u, nu_map,
};
use crate::relation::Relation;
use crate::spaces::{
    self, DhMorphism, DhSpace, DualMorphism, DualSpace, FiltMorphism, RelationPair, StableFamily,
};
use crate::subset::Subset;

use super::cycle::full_cycle_morphism;

/// Which natural isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NaturalKind {
    Epsilon,
    Zeta,
    Eta,
    Theta,
    Kappa,
}

impl NaturalKind {
    pub const ALL: [NaturalKind; 5] = [
        NaturalKind::Epsilon,
        NaturalKind::Zeta,
        NaturalKind::Eta,
        NaturalKind::Theta,
        NaturalKind::Kappa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NaturalKind::Epsilon => "epsilon",
            NaturalKind::Zeta => "zeta",
            NaturalKind::Eta => "eta",
            NaturalKind::Theta => "theta",
            NaturalKind::Kappa => "kappa",
        }
    }
}

impl fmt::Display for NaturalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A component `forward: source → target` of a natural isomorphism with
/// its inverse `target → source`.
#[derive(Debug, Clone)]
pub struct NaturalComponent {
    pub kind: NaturalKind,
    pub source: DualSpace,
    pub target: DualSpace,
    pub forward: DualMorphism,
    pub inverse: DualMorphism,
}

fn not_iso(kind: NaturalKind, why: impl fmt::Display) -> Error {
    Error::ComponentNotIso(format!("{kind}: {why}"))
}

/// Position of an ambient index inside an embedding.
fn locate(embedding: &[usize], x: usize) -> Option<usize> {
    embedding.iter().position(|&e| e == x)
}

fn invert(kind: NaturalKind, map: &[usize], target_len: usize) -> Result<Vec<usize>> {
    if map.len() != target_len {
        return Err(not_iso(
            kind,
            format!("{} points map onto {target_len}", map.len()),
        ));
    }
    let mut inverse = vec![usize::MAX; target_len];
    for (x, &v) in map.iter().enumerate() {
        if inverse[v] != usize::MAX {
            return Err(not_iso(kind, "component map is not injective"));
        }
        inverse[v] = x;
    }
    Ok(inverse)
}

/// `(S_α, T_β)` with `x S_α x̄` iff `α(x) ≤ x̄` in the target orders.
fn pair_from_maps(alpha: &[usize], beta: &[usize], target_orders: &RelationPair) -> RelationPair {
    let (lo, ro) = (&target_orders.left, &target_orders.right);
    RelationPair {
        left: Relation::from_fn(alpha.len(), lo.left_len(), |x, t| lo.contains(alpha[x], t)),
        right: Relation::from_fn(beta.len(), ro.left_len(), |y, t| ro.contains(beta[y], t)),
    }
}

/// The stable set's index in a family, failing loudly.
fn index_in(kind: NaturalKind, family: &StableFamily, s: &Subset) -> Result<usize> {
    family
        .position(s)
        .ok_or_else(|| not_iso(kind, "component image is not a member of the target family"))
}

/// Build the component of `kind` at `space` and verify that it is an
/// isomorphism in its category.
pub fn nat_component(kind: NaturalKind, space: &DualSpace) -> Result<NaturalComponent> {
    let component = build_component(kind, space)?;
    verify_component(&component)?;
    Ok(component)
}

fn build_component(kind: NaturalKind, space: &DualSpace) -> Result<NaturalComponent> {
    match (kind, space) {
        (NaturalKind::Epsilon, DualSpace::Dh(d)) => epsilon(d),
        (NaturalKind::Kappa, DualSpace::Dh(d)) => kappa(d),
        (NaturalKind::Zeta, DualSpace::Gvg(g)) => {
            let h = functor_hg(g)?;
            let (x0, y0) = hg_embeddings(g);
            let z = h.maximal_pairs();
            let u = functor_u(&h)?;
            let (lc, rc) = (u.left_closed()?, u.right_closed()?);
            let dsp = functor_d(&u)?;
            let target = functor_g(&dsp)?;
            let (lcp, rcp) = gvg_embeddings(&dsp);
            let alpha = (0..g.x().len())
                .map(|x| {
                    let c = index_in(
                        kind,
                        &lc,
                        &Subset::from_predicate(z.len(), |i| g.x().leq(x, x0[z[i].0])),
                    )?;
                    locate(&lcp, c).ok_or_else(|| not_iso(kind, "α(x) is not d-prime"))
                })
                .collect::<Result<Vec<_>>>()?;
            let beta = (0..g.y().len())
                .map(|y| {
                    let e = index_in(
                        kind,
                        &rc,
                        &Subset::from_predicate(z.len(), |i| g.y().leq(y, y0[z[i].1])),
                    )?;
                    locate(&rcp, e).ok_or_else(|| not_iso(kind, "β(y) is not d-prime"))
                })
                .collect::<Result<Vec<_>>>()?;
            let (ai, bi) = (
                invert(kind, &alpha, target.x().len())?,
                invert(kind, &beta, target.y().len())?,
            );
            Ok(NaturalComponent {
                kind,
                forward: DualMorphism::Gvg(pair_from_maps(&alpha, &beta, &target.identity())),
                inverse: DualMorphism::Gvg(pair_from_maps(&ai, &bi, &g.identity())),
                source: space.clone(),
                target: DualSpace::Gvg(target),
            })
        }
        (NaturalKind::Eta, DualSpace::Hg(h)) => {
            let z = h.maximal_pairs();
            let (lx, ly) = h.derived_quasi_orders();
            let u = functor_u(h)?;
            let (lc, rc) = (u.left_closed()?, u.right_closed()?);
            let dsp = functor_d(&u)?;
            let (lcp, rcp) = gvg_embeddings(&dsp);
            let g = functor_g(&dsp)?;
            let (x0, y0) = hg_embeddings(&g);
            let target = functor_hg(&g)?;
            let through = |c: usize, p: &[usize], zero: &[usize]| {
                locate(p, c)
                    .and_then(|i| locate(zero, i))
                    .ok_or_else(|| not_iso(kind, "component image is not in X₀ / Y₀"))
            };
            let alpha = (0..h.x_labels().len())
                .map(|x| {
                    let c = index_in(
                        kind,
                        &lc,
                        &Subset::from_predicate(z.len(), |i| lx.contains(x, z[i].0)),
                    )?;
                    through(c, &lcp, &x0)
                })
                .collect::<Result<Vec<_>>>()?;
            let beta = (0..h.y_labels().len())
                .map(|y| {
                    let e = index_in(
                        kind,
                        &rc,
                        &Subset::from_predicate(z.len(), |i| ly.contains(y, z[i].1)),
                    )?;
                    through(e, &rcp, &y0)
                })
                .collect::<Result<Vec<_>>>()?;
            let (ai, bi) = (
                invert(kind, &alpha, target.x_labels().len())?,
                invert(kind, &beta, target.y_labels().len())?,
            );
            Ok(NaturalComponent {
                kind,
                forward: DualMorphism::Hg(pair_from_maps(&alpha, &beta, &target.identity())),
                inverse: DualMorphism::Hg(pair_from_maps(&ai, &bi, &h.identity())),
                source: space.clone(),
                target: DualSpace::Hg(target),
            })
        }
        (NaturalKind::Theta, DualSpace::Urq(u)) => {
            let (lc, rc) = (u.left_closed()?, u.right_closed()?);
            let dsp = functor_d(u)?;
            let (lcp, rcp) = gvg_embeddings(&dsp);
            let g = functor_g(&dsp)?;
            let (x0, y0) = hg_embeddings(&g);
            let hsp = functor_hg(&g)?;
            let zbar = hsp.maximal_pairs();
            let target = functor_u(&hsp)?;
            let h = (0..u.len())
                .map(|z| {
                    let c = index_in(kind, &lc, u.first_order().row(z))?;
                    let e = index_in(kind, &rc, u.second_order().row(z))?;
                    let a = locate(&lcp, c).and_then(|i| locate(&x0, i));
                    let b = locate(&rcp, e).and_then(|i| locate(&y0, i));
                    match (a, b) {
                        (Some(a), Some(b)) => zbar
                            .iter()
                            .position(|&p| p == (a, b))
                            .ok_or_else(|| not_iso(kind, "h(z) is not a maximal pair")),
                        _ => Err(not_iso(kind, "h(z) has a coordinate outside X₀ / Y₀")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let hi = invert(kind, &h, target.len())?;
            Ok(NaturalComponent {
                kind,
                forward: DualMorphism::Urq(pair_from_maps(&h, &h, &target.identity())),
                inverse: DualMorphism::Urq(pair_from_maps(&hi, &hi, &u.identity())),
                source: space.clone(),
                target: DualSpace::Urq(target),
            })
        }
        _ => Err(Error::CategoryMismatch(
            match kind {
                NaturalKind::Epsilon | NaturalKind::Kappa => "dh",
                NaturalKind::Zeta => "gvg",
                NaturalKind::Eta => "hg",
                NaturalKind::Theta => "urq",
            }
            .into(),
            space.category().name().into(),
        )),
    }
}

/// `ε_D = (α, β)` with `α(x) = (↑x × Y) ∩ Z` and `β(y) = (X × ↑y) ∩ Z`.
fn epsilon(d: &DhSpace) -> Result<NaturalComponent> {
    let kind = NaturalKind::Epsilon;
    let g = functor_g(d)?;
    let (xp, yp) = gvg_embeddings(d);
    let h = functor_hg(&g)?;
    let (x0, y0) = hg_embeddings(&g);
    let z = h.maximal_pairs();
    let u = functor_u(&h)?;
    let (lc, rc) = (u.left_closed()?, u.right_closed()?);
    let target = functor_d(&u)?;
    let x_map = (0..d.x().len())
        .map(|x| {
            index_in(
                kind,
                &lc,
                &Subset::from_predicate(z.len(), |i| d.x().leq(x, xp[x0[z[i].0]])),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let y_map = (0..d.y().len())
        .map(|y| {
            index_in(
                kind,
                &rc,
                &Subset::from_predicate(z.len(), |i| d.y().leq(y, yp[y0[z[i].1]])),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let inverse = DhMorphism {
        x_map: invert(kind, &x_map, target.x().len())?,
        y_map: invert(kind, &y_map, target.y().len())?,
    };
    Ok(NaturalComponent {
        kind,
        source: DualSpace::Dh(d.clone()),
        target: DualSpace::Dh(target),
        forward: DualMorphism::Dh(DhMorphism { x_map, y_map }),
        inverse: DualMorphism::Dh(inverse),
    })
}

/// `κ_D = (1_X, ν)` with `ν(y) = −R⁻¹[y]`, landing in `E(X)`.
fn kappa(d: &DhSpace) -> Result<NaturalComponent> {
    let kind = NaturalKind::Kappa;
    let nu = nu_map(d)?;
    let identity: Vec<usize> = (0..d.x().len()).collect();
    let inverse = DhMorphism {
        x_map: identity.clone(),
        y_map: invert(kind, &nu, d.x().len())?,
    };
    Ok(NaturalComponent {
        kind,
        source: DualSpace::Dh(d.clone()),
        target: DualSpace::Dh(e_functor(d.x())),
        forward: DualMorphism::Dh(DhMorphism {
            x_map: identity,
            y_map: nu,
        }),
        inverse: DualMorphism::Dh(inverse),
    })
}

/// Both directions validate and compose to identities on either side.
fn verify_component(c: &NaturalComponent) -> Result<()> {
    let kind = c.kind;
    let forward = spaces::validate_morphism(&c.forward, &c.source, &c.target)?;
    if let Some(v) = forward.violation() {
        return Err(not_iso(kind, format!("forward map violates {}", v.id)));
    }
    let inverse = spaces::validate_morphism(&c.inverse, &c.target, &c.source)?;
    if let Some(v) = inverse.violation() {
        return Err(not_iso(kind, format!("inverse map violates {}", v.id)));
    }
    if spaces::star_compose(&c.inverse, &c.forward, &c.source)? != c.source.identity() {
        return Err(not_iso(kind, "inverse after forward is not the identity"));
    }
    if spaces::star_compose(&c.forward, &c.inverse, &c.target)? != c.target.identity() {
        return Err(not_iso(kind, "forward after inverse is not the identity"));
    }
    Ok(())
}

/// Check the naturality square of `kind` for `m: source → target`.
/// `Ok(None)` when the square commutes, otherwise the first difference.
pub fn check_naturality(
    kind: NaturalKind,
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<Option<String>> {
    let at_source = nat_component(kind, source)?;
    let at_target = nat_component(kind, target)?;
    check_naturality_with(m, &at_source, &at_target)
}

/// The square `F(m) ∘ c_source = c_target ∘ m` for explicitly supplied
/// components, where `F` is the composite functor of the components'
/// kind and `∘` is `⋆` in the relational categories.
pub fn check_naturality_with(
    m: &DualMorphism,
    at_source: &NaturalComponent,
    at_target: &NaturalComponent,
) -> Result<Option<String>> {
    let (source, target) = (&at_source.source, &at_target.source);
    let image = match (at_source.kind, m, source, target) {
        (NaturalKind::Kappa, DualMorphism::Dh(f), DualSpace::Dh(a), DualSpace::Dh(b)) => {
            let filt = FiltMorphism {
                map: f.x_map.clone(),
            };
            DualMorphism::Dh(e_functor_mor(a.x(), b.x(), &filt)?)
        }
        _ => full_cycle_morphism(m, source, target)?,
    };
    let lhs = spaces::star_compose(&image, &at_source.forward, &at_target.target)?;
    let rhs = spaces::star_compose(&at_target.forward, m, &at_target.target)?;
    Ok(first_difference(&lhs, &rhs).map(|d| format!("{} square fails: {d}", at_source.kind)))
}

/// The first entry where two morphisms of the same shape differ.
pub fn first_difference(a: &DualMorphism, b: &DualMorphism) -> Option<String> {
    let maps = |side: &str, f: &[usize], g: &[usize]| {
        if f.len() != g.len() {
            return Some(format!("{side} maps have different domains"));
        }
        f.iter()
            .zip(g)
            .position(|(p, q)| p != q)
            .map(|i| format!("{side} maps differ at point {i}: {} vs {}", f[i], g[i]))
    };
    let rels = |side: &str, r: &Relation, s: &Relation| {
        if (r.left_len(), r.right_len()) != (s.left_len(), s.right_len()) {
            return Some(format!("{side} relations have different shapes"));
        }
        (0..r.left_len())
            .flat_map(|i| (0..r.right_len()).map(move |j| (i, j)))
            .find(|&(i, j)| r.contains(i, j) != s.contains(i, j))
            .map(|(i, j)| format!("{side} relations differ on pair ({i}, {j})"))
    };
    match (a, b) {
        (DualMorphism::Filt(f), DualMorphism::Filt(g)) => maps("filter", &f.map, &g.map),
        (DualMorphism::Dh(f), DualMorphism::Dh(g)) => {
            maps("left", &f.x_map, &g.x_map).or_else(|| maps("right", &f.y_map, &g.y_map))
        }
        (DualMorphism::Cg(s), DualMorphism::Cg(t)) => rels("CG", &s.relation, &t.relation),
        _ => match (a.as_pair(), b.as_pair()) {
            (Some(p), Some(q)) if a.category() == b.category() => {
                rels("left", &p.left, &q.left).or_else(|| rels("right", &p.right, &q.right))
            }
            _ => Some(format!(
                "morphisms of {} and {}",
                a.category(),
                b.category()
            )),
        },
    }
}
