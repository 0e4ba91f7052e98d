//! Canonical labelling, for comparing diagrams up to arc names and site rotations.

use std::collections::HashMap;

use super::{MarkedDiagram, Site, SiteKind};

const MAX_ROTATION_SEARCH: usize = 14;

impl MarkedDiagram {
    /// Relabels arcs 1, 2, ... by first occurrence and ids 1, 2, ... in order. Sites that can
    /// be rotated by two slots without changing the diagram (markers, and crossings when
    /// unoriented) take the rotation giving the smallest encoding.
    pub fn canonical(&self) -> MarkedDiagram {
        let n = self.sites().len();
        let free: Vec<usize> = (0..n)
            .filter(|&i| self.sites()[i].kind == SiteKind::Marker || !self.is_oriented())
            .collect();
        if free.len() > MAX_ROTATION_SEARCH {
            return self.relabelled(&vec![false; n]);
        }
        let mut best: Option<MarkedDiagram> = None;
        for mask in 0u64..(1u64 << free.len()) {
            let mut rot = vec![false; n];
            for (k, &i) in free.iter().enumerate() {
                rot[i] = mask >> k & 1 == 1;
            }
            let cand = self.relabelled(&rot);
            if best.as_ref().is_none_or(|b| cand.key() < b.key()) {
                best = Some(cand);
            }
        }
        best.unwrap_or_else(|| self.clone())
    }

    fn key(&self) -> (Vec<(SiteKind, [u32; 4])>, Vec<[bool; 4]>) {
        (
            self.sites().iter().map(|s| (s.kind, s.arcs)).collect(),
            self.orientation().map(|o| o.to_vec()).unwrap_or_default(),
        )
    }

    fn relabelled(&self, rot: &[bool]) -> MarkedDiagram {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut sites = Vec::new();
        let mut flags = Vec::new();
        for (i, s) in self.sites().iter().enumerate() {
            let order = if rot[i] { [2, 3, 0, 1] } else { [0, 1, 2, 3] };
            let arcs = order.map(|p| {
                let next = map.len() as u32 + 1;
                *map.entry(s.arcs[p]).or_insert(next)
            });
            sites.push(Site { id: i + 1, kind: s.kind, arcs });
            if let Some(o) = self.orientation() {
                flags.push(order.map(|p| o[i][p]));
            }
        }
        let orientation = self.orientation().map(|_| flags);
        MarkedDiagram::new_unchecked(sites, self.free_loops(), orientation)
    }

    /// Equal up to arc relabelling and the allowed site rotations; site order must match.
    pub fn same_up_to_labels(&self, other: &MarkedDiagram) -> bool {
        self.canonical() == other.canonical()
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::MarkedDiagram;

    #[test]
    fn relabelled_copies_agree() {
        let a = MarkedDiagram::parse("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap();
        let b = MarkedDiagram::parse("X 10 50 20 40\nX 30 10 40 60\nX 50 30 60 20").unwrap();
        let c = MarkedDiagram::parse("X 2 4 1 5\nX 3 1 4 6\nX 5 3 6 2").unwrap();
        assert!(a.same_up_to_labels(&b));
        assert!(a.same_up_to_labels(&c));
        let mirror = MarkedDiagram::parse("X 5 2 4 1\nX 1 4 6 3\nX 3 6 2 5").unwrap();
        assert!(!a.same_up_to_labels(&mirror));
    }
}
