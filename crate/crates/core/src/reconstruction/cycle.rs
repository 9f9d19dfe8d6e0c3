//! One step around the cycle `DH → GvG → Hg → Urq → DH`, on spaces and on
//! morphisms.

use crate::error::{Error, Result};
use crate::functors::{
    functor_d, functor_d_mor, functor_g, functor_g_mor, functor_hg, functor_hg_mor, functor_u,
    functor_u_mor,
};
use crate::spaces::{DualMorphism, DualSpace};

/// `G`, `H`, `U` or `D`, whichever leaves the space's category.
pub fn next_space(space: &DualSpace) -> Result<DualSpace> {
    Ok(match space {
        DualSpace::Dh(d) => DualSpace::Gvg(functor_g(d)?),
        DualSpace::Gvg(g) => DualSpace::Hg(functor_hg(g)?),
        DualSpace::Hg(h) => DualSpace::Urq(functor_u(h)?),
        DualSpace::Urq(u) => DualSpace::Dh(functor_d(u)?),
        other => return Err(off_cycle(other)),
    })
}

/// The same functor applied to a morphism `source → target`.
pub fn next_morphism(
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<DualMorphism> {
    Ok(match (m, source, target) {
        (DualMorphism::Dh(f), DualSpace::Dh(a), DualSpace::Dh(b)) => {
            DualMorphism::Gvg(functor_g_mor(a, b, f))
        }
        (DualMorphism::Gvg(p), DualSpace::Gvg(a), DualSpace::Gvg(b)) => {
            DualMorphism::Hg(functor_hg_mor(a, b, p))
        }
        (DualMorphism::Hg(p), DualSpace::Hg(a), DualSpace::Hg(b)) => {
            DualMorphism::Urq(functor_u_mor(a, b, p))
        }
        (DualMorphism::Urq(p), DualSpace::Urq(a), DualSpace::Urq(b)) => {
            DualMorphism::Dh(functor_d_mor(a, b, p)?)
        }
        _ => {
            return Err(Error::CategoryMismatch(
                m.category().name().into(),
                source.category().name().into(),
            ))
        }
    })
}

/// Go all the way around the cycle (four functors) on a space.
pub fn full_cycle_space(space: &DualSpace) -> Result<DualSpace> {
    let mut s = space.clone();
    for _ in 0..4 {
        s = next_space(&s)?;
    }
    Ok(s)
}

/// Go all the way around the cycle on a morphism `source → target`.
pub fn full_cycle_morphism(
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<DualMorphism> {
    let (mut m, mut s, mut t) = (m.clone(), source.clone(), target.clone());
    for _ in 0..4 {
        m = next_morphism(&m, &s, &t)?;
        s = next_space(&s)?;
        t = next_space(&t)?;
    }
    Ok(m)
}

fn off_cycle(space: &DualSpace) -> Error {
    Error::CategoryMismatch("dh, gvg, hg or urq".into(), space.category().name().into())
}
