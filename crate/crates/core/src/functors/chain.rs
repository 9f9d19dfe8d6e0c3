//! The cycle of functors `DH → GvG → Hg → Urq → DH`, and the isomorphism
//! of categories between Urquhart and Ploščica spaces.

use crate::error::{Error, Result};
use crate::lattice::DPrimeMode;
use crate::relation::Relation;
use crate::spaces::{
    DhMorphism, DhSpace, GvgSpace, HgSpace, PairSpace, PloSpace, RelationPair, UrqSpace,
};
use crate::subset::Subset;

/// Indices of the d-prime elements of both sides of a DH-space: the
/// carriers `X_p`, `Y_p` of its GvG-space, in increasing order.
pub fn gvg_embeddings(d: &DhSpace) -> (Vec<usize>, Vec<usize>) {
    (
        d.x().d_prime(DPrimeMode::Exact).iter().collect(),
        d.y().d_prime(DPrimeMode::Exact).iter().collect(),
    )
}

/// `G(X, R, Y) = (X_p, R ∩ (X_p × Y_p), Y_p)` with the induced orders.
pub fn functor_g(d: &DhSpace) -> Result<GvgSpace> {
    let (xp, yp) = gvg_embeddings(d);
    let (x, _) = d
        .x()
        .poset()
        .subposet(&Subset::from_indices(d.x().len(), xp.iter().copied()));
    let (y, _) = d
        .y()
        .poset()
        .subposet(&Subset::from_indices(d.y().len(), yp.iter().copied()));
    GvgSpace::new(x, y, d.relation().restrict(&xp, &yp))
}

/// `G(f, g) = (S_f, T_g)`: `x S_f x′` iff `f(x) ≤ x′`, `y T_g y′` iff
/// `g(y) ≤ y′`.
pub fn functor_g_mor(source: &DhSpace, target: &DhSpace, m: &DhMorphism) -> RelationPair {
    let (xp, yp) = gvg_embeddings(source);
    let (xp2, yp2) = gvg_embeddings(target);
    RelationPair {
        left: Relation::from_fn(xp.len(), xp2.len(), |a, b| {
            target.x().leq(m.x_map[xp[a]], xp2[b])
        }),
        right: Relation::from_fn(yp.len(), yp2.len(), |a, b| {
            target.y().leq(m.y_map[yp[a]], yp2[b])
        }),
    }
}

/// Indices of `X₀` and `Y₀` inside the carriers of a GvG-space.
pub fn hg_embeddings(g: &GvgSpace) -> (Vec<usize>, Vec<usize>) {
    let (x0, y0) = g.x0_y0();
    (x0.iter().collect(), y0.iter().collect())
}

/// `(X₀, R₀, Y₀)`: the restriction to the points maximal in some
/// `R⁻¹[y]` (resp. `R[x]`).
pub fn functor_hg(g: &GvgSpace) -> Result<HgSpace> {
    let (x0, y0) = hg_embeddings(g);
    let xl = x0.iter().map(|&i| g.x().label(i).to_string()).collect();
    let yl = y0.iter().map(|&i| g.y().label(i).to_string()).collect();
    HgSpace::new(xl, yl, g.relation().restrict(&x0, &y0))
}

/// `(S₀, T₀)`: both relations restricted to the `X₀`/`Y₀` carriers.
pub fn functor_hg_mor(source: &GvgSpace, target: &GvgSpace, m: &RelationPair) -> RelationPair {
    let (x0, y0) = hg_embeddings(source);
    let (x02, y02) = hg_embeddings(target);
    RelationPair {
        left: m.left.restrict(&x0, &x02),
        right: m.right.restrict(&y0, &y02),
    }
}

/// `U(X, R, Y) = (Z, ≤₁, ≤₂)`: `Z` is the set of maximal pairs and
/// `(x, y) ≤₁ (x′, y′)` iff `x ≤ x′`, `(x, y) ≤₂ (x′, y′)` iff `y ≤ y′`
/// in the derived orders.
pub fn functor_u(h: &HgSpace) -> Result<UrqSpace> {
    let z = h.maximal_pairs();
    let (lx, ly) = h.derived_quasi_orders();
    let labels = z
        .iter()
        .map(|&(a, b)| format!("({},{})", h.x_labels()[a], h.y_labels()[b]))
        .collect();
    let first = Relation::from_fn(z.len(), z.len(), |i, j| lx.contains(z[i].0, z[j].0));
    let second = Relation::from_fn(z.len(), z.len(), |i, j| ly.contains(z[i].1, z[j].1));
    UrqSpace::new(labels, first, second)
}

/// `U(S, T) = (P, Q)`: `(x, y) P (x′, y′)` iff `x S x′`, and
/// `(x, y) Q (x′, y′)` iff `y T y′`.
pub fn functor_u_mor(source: &HgSpace, target: &HgSpace, m: &RelationPair) -> RelationPair {
    let (z, z2) = (source.maximal_pairs(), target.maximal_pairs());
    RelationPair {
        left: Relation::from_fn(z.len(), z2.len(), |i, j| m.left.contains(z[i].0, z2[j].0)),
        right: Relation::from_fn(z.len(), z2.len(), |i, j| m.right.contains(z[i].1, z2[j].1)),
    }
}

/// `P(Z, ≤₁, ≤₂) = (Z, R)` with `x R y` iff `x ≤₁ z` and `y ≤₂ z` for some
/// `z`.
pub fn functor_p(u: &UrqSpace) -> PloSpace {
    let n = u.len();
    let (q1, q2) = (u.first_order(), u.second_order());
    let relation = Relation::from_fn(n, n, |a, b| q1.row(a).intersects(q2.row(b)));
    PloSpace::new(u.labels().to_vec(), relation).expect("relation lives on Z")
}

/// `P⁻¹(Z, R) = (Z, ≤₁, ≤₂)` with `x ≤₁ z` iff `R[z] ⊆ R[x]` and
/// `y ≤₂ z` iff `R⁻¹[z] ⊆ R⁻¹[y]`.
pub fn functor_p_inv(p: &PloSpace) -> UrqSpace {
    let (first, second) = p.quasi_orders();
    UrqSpace::new(p.labels().to_vec(), first, second).expect("orders live on Z")
}

/// `D(𝒰) = (LC 𝒰, R_𝒰, RC 𝒰)`: both families ordered by reverse
/// inclusion and `D R_𝒰 E` iff `D ∩ E ≠ ∅`.
pub fn functor_d(u: &UrqSpace) -> Result<DhSpace> {
    let lc = u.left_closed()?;
    let rc = u.right_closed()?;
    let relation = Relation::from_fn(lc.len(), rc.len(), |i, j| {
        lc.member(i).intersects(rc.member(j))
    });
    DhSpace::new(lc.into_lattice(), rc.into_lattice(), relation)
}

/// `D(P, Q) = (f_PQ, g_PQ)` with `f_PQ(D) = ⋂{C′ ∈ ℒ𝒰′ : D ⊆ □_P C′}` and
/// `g_PQ(E) = ⋂{φ′C′ : C′ ∈ ℒ𝒰′, E ⊆ □_Q φ′C′}`.
pub fn functor_d_mor(source: &UrqSpace, target: &UrqSpace, m: &RelationPair) -> Result<DhMorphism> {
    let (lc, rc) = (source.left_closed()?, source.right_closed()?);
    let (lc2, rc2) = (target.left_closed()?, target.right_closed()?);
    let stable2 = target.stable_sets();
    let polars2: Vec<Subset> = stable2.iter().map(|c| target.phi(c)).collect();
    let image = |from: &Subset, rel: &Relation, family: &[Subset]| {
        let mut out = Subset::full(target.len());
        for c in family.iter().filter(|c| from.is_subset(&rel.boxed(c))) {
            out.intersect_with(c);
        }
        out
    };
    let locate = |family: &crate::spaces::StableFamily, s: &Subset, side: &str| {
        family.position(s).ok_or_else(|| {
            Error::NotValidated(format!(
                "{side} image {} is not a closed set of the target",
                s.display_with(target.labels())
            ))
        })
    };
    let x_map = lc
        .members()
        .iter()
        .map(|d| locate(&lc2, &image(d, &m.left, &stable2), "left"))
        .collect::<Result<Vec<_>>>()?;
    let y_map = rc
        .members()
        .iter()
        .map(|e| locate(&rc2, &image(e, &m.right, &polars2), "right"))
        .collect::<Result<Vec<_>>>()?;
    Ok(DhMorphism { x_map, y_map })
}
