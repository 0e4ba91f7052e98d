//! The state sum `P(D)` and its normalizations.

mod normalize;

use std::collections::HashMap;

use crate::algebra::RingElement;
use crate::diagram::{MarkedDiagram, SiteKind, SpliceState, State};
use crate::error::{Error, Result};
use crate::magma::MagmaSpec;

pub use normalize::{apply_normalizer, NormalizerKind, NormalizerSpec};

/// Markers first, then crossings, each by increasing id.
pub fn canonical_order(d: &MarkedDiagram) -> Vec<usize> {
    let ids = |k: SiteKind| d.sites().iter().filter(move |s| s.kind == k).map(|s| s.id);
    ids(SiteKind::Marker).chain(ids(SiteKind::Crossing)).collect()
}

/// `P(D)` (or `P_M(D)`) expanded in the canonical order.
pub fn state_sum(d: &MarkedDiagram, m: &MagmaSpec) -> Result<RingElement> {
    state_sum_ordered(d, m, &canonical_order(d))
}

/// `P(D)` with sites expanded in the given order (site ids, each exactly once). A crossing
/// contributes `P(D_0) * P(D_inf)`, a marked vertex `P(D_inf) • P(D_0)`.
pub fn state_sum_ordered(d: &MarkedDiagram, m: &MagmaSpec, order: &[usize]) -> Result<RingElement> {
    let n = d.sites().len();
    let idx = order.iter().map(|&id| d.site_index(id)).collect::<Result<Vec<_>>>()?;
    let mut sorted = idx.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n || idx.len() != n {
        return Err(Error::InvalidDiagram("expansion order must list every site once".into()));
    }
    if d.marker_count() > 0 && !m.is_marked() {
        return Err(Error::NoBullet);
    }
    let mut leaves: HashMap<usize, RingElement> = HashMap::new();
    let mut states = vec![State::Zero; n];
    expand(d, m, &idx, 0, &mut states, &mut leaves)
}

fn expand(
    d: &MarkedDiagram,
    m: &MagmaSpec,
    idx: &[usize],
    k: usize,
    states: &mut Vec<State>,
    leaves: &mut HashMap<usize, RingElement>,
) -> Result<RingElement> {
    if k == idx.len() {
        let c = d.count_state_components(&|i| states[i]);
        if let Some(v) = leaves.get(&c) {
            return Ok(v.clone());
        }
        let v = m.seq(c as i64)?;
        leaves.insert(c, v.clone());
        return Ok(v);
    }
    let i = idx[k];
    states[i] = State::Zero;
    let zero = expand(d, m, idx, k + 1, states, leaves)?;
    states[i] = State::Infinity;
    let inf = expand(d, m, idx, k + 1, states, leaves)?;
    match d.sites()[i].kind {
        SiteKind::Crossing => m.star(&zero, &inf),
        SiteKind::Marker => m.bullet(&inf, &zero),
    }
}

/// Reference evaluator that splices diagrams one site at a time, in the canonical order.
pub fn state_sum_by_splicing(d: &MarkedDiagram, m: &MagmaSpec) -> Result<RingElement> {
    let Some(&id) = canonical_order(d).first() else {
        return m.seq(d.count_components()? as i64);
    };
    let site = &d.sites()[d.site_index(id)?];
    let zero = state_sum_by_splicing(&d.splice(SpliceState { site: site.id, state: State::Zero })?, m)?;
    let inf = state_sum_by_splicing(&d.splice(SpliceState { site: site.id, state: State::Infinity })?, m)?;
    match site.kind {
        SiteKind::Crossing => m.star(&zero, &inf),
        SiteKind::Marker => m.bullet(&inf, &zero),
    }
}

/// `P(D)` followed by the named normalizers, in order. Each must be declared by the magma.
pub fn compute(d: &MarkedDiagram, m: &MagmaSpec, normalizers: &[&str]) -> Result<RingElement> {
    let specs = normalizers.iter().map(|n| m.normalizer(n)).collect::<Result<Vec<_>>>()?;
    let mut v = state_sum(d, m)?;
    for s in specs {
        v = apply_normalizer(&v, d, s)?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builtin;

    fn trefoil() -> MarkedDiagram {
        MarkedDiagram::parse("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap()
    }

    #[test]
    fn trefoil_bracket() {
        let m = builtin("kb-poly").unwrap();
        let v = state_sum(&trefoil(), &m).unwrap();
        assert_eq!(v.to_string(), "-A^5 - A^-3 + A^-7");
        assert_eq!(state_sum_by_splicing(&trefoil(), &m).unwrap().to_string(), v.to_string());
    }

    #[test]
    fn unknot_and_circles() {
        let m = builtin("kb-poly").unwrap();
        assert_eq!(state_sum(&MarkedDiagram::trivial(1), &m).unwrap().to_string(), "1");
        assert_eq!(state_sum(&MarkedDiagram::trivial(3), &m).unwrap().to_string(), "A^4 + 2 + A^-4");
    }

    #[test]
    fn order_is_validated() {
        let m = builtin("kb-poly").unwrap();
        assert!(state_sum_ordered(&trefoil(), &m, &[1, 2]).is_err());
        assert!(state_sum_ordered(&trefoil(), &m, &[1, 2, 9]).is_err());
        let v = state_sum_ordered(&trefoil(), &m, &[3, 1, 2]).unwrap();
        assert!(v.eq(&state_sum(&trefoil(), &m).unwrap()).unwrap());
    }

    #[test]
    fn markers_need_bullet() {
        let d = MarkedDiagram::parse("X 1 2 3 4\nM 2 1 4 3").unwrap();
        assert_eq!(state_sum(&d, &builtin("kb-poly").unwrap()).err(), Some(Error::NoBullet));
    }
}
