//! Marked graph diagrams in planar-diagram code.
//!
//! A site is a classical crossing `X a b c d` (counterclockwise from the incoming under-arc) or
//! a marked vertex `M a b c d` (counterclockwise, marker bar across the a–c diagonal). Every
//! arc label appears in exactly two slots. Crossing-free circles are kept as a counter.

mod canon;
mod faces;
mod orient;
mod parse;
mod rewire;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::DisjointSet;

pub use faces::Face;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SiteKind {
    Crossing,
    Marker,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Site {
    pub id: usize,
    pub kind: SiteKind,
    pub arcs: [u32; 4],
}

/// A site index in `sites()` and a position 0..4.
pub type Slot = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum State {
    Zero,
    Infinity,
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            State::Zero => "0",
            State::Infinity => "inf",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpliceState {
    pub site: usize,
    pub state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// Slot pairs joined when splicing a site of the given kind in the given state.
pub fn splice_pairs(kind: SiteKind, state: State) -> [(usize, usize); 2] {
    const AB_CD: [(usize, usize); 2] = [(0, 1), (2, 3)];
    const AD_BC: [(usize, usize); 2] = [(0, 3), (1, 2)];
    match (kind, state) {
        (SiteKind::Crossing, State::Zero) | (SiteKind::Marker, State::Infinity) => AB_CD,
        (SiteKind::Crossing, State::Infinity) | (SiteKind::Marker, State::Zero) => AD_BC,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    pub c: usize,
    pub m: usize,
    pub p: Option<usize>,
    pub n: Option<usize>,
    pub w: Option<i64>,
}

impl fmt::Display for DiagramStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} m={}", self.c, self.m)?;
        if let (Some(p), Some(n), Some(w)) = (self.p, self.n, self.w) {
            write!(f, " p={p} n={n} w={w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    sites: Vec<Site>,
    free_loops: u32,
    /// Per slot: true when the arc there points into the site.
    orientation: Option<Vec<[bool; 4]>>,
}

impl MarkedDiagram {
    /// Validated constructor: labels, planarity and, when given, orientation.
    pub fn new(sites: Vec<Site>, free_loops: u32, orientation: Option<Vec<[bool; 4]>>) -> Result<Self> {
        let d = Self::new_unchecked(sites, free_loops, orientation);
        d.validate()?;
        Ok(d)
    }

    /// Skips validation; sites are sorted by id.
    pub fn new_unchecked(mut sites: Vec<Site>, free_loops: u32, orientation: Option<Vec<[bool; 4]>>) -> Self {
        let orientation = orientation.map(|o| {
            let mut paired: Vec<(Site, [bool; 4])> = sites.iter().cloned().zip(o).collect();
            paired.sort_by_key(|(s, _)| s.id);
            paired.into_iter().map(|(_, f)| f).collect::<Vec<_>>()
        });
        sites.sort_by_key(|s| s.id);
        MarkedDiagram { sites, free_loops, orientation }
    }

    /// `k` disjoint circles.
    pub fn trivial(k: u32) -> Self {
        MarkedDiagram { sites: Vec::new(), free_loops: k, orientation: None }
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn orientation(&self) -> Option<&[[bool; 4]]> {
        self.orientation.as_deref()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    pub fn without_orientation(&self) -> Self {
        MarkedDiagram { orientation: None, ..self.clone() }
    }

    pub fn with_free_loops(&self, k: u32) -> Self {
        MarkedDiagram { free_loops: k, ..self.clone() }
    }

    pub fn site_index(&self, id: usize) -> Result<usize> {
        self.sites.iter().position(|s| s.id == id).ok_or(Error::UnknownSite(id))
    }

    pub fn crossing_count(&self) -> usize {
        self.sites.iter().filter(|s| s.kind == SiteKind::Crossing).count()
    }

    pub fn marker_count(&self) -> usize {
        self.sites.iter().filter(|s| s.kind == SiteKind::Marker).count()
    }

    pub fn label(&self, slot: Slot) -> u32 {
        self.sites[slot.0].arcs[slot.1]
    }

    /// Both slots of every arc label.
    pub fn occurrences(&self) -> BTreeMap<u32, Vec<Slot>> {
        let mut occ: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (i, s) in self.sites.iter().enumerate() {
            for (p, &a) in s.arcs.iter().enumerate() {
                occ.entry(a).or_default().push((i, p));
            }
        }
        occ
    }

    pub fn arc_labels(&self) -> Vec<u32> {
        self.occurrences().into_keys().collect()
    }

    /// The slot at the other end of the arc leaving `slot`.
    pub fn partner(&self, slot: Slot) -> Slot {
        let a = self.label(slot);
        for (i, s) in self.sites.iter().enumerate() {
            for (p, &b) in s.arcs.iter().enumerate() {
                if b == a && (i, p) != slot {
                    return (i, p);
                }
            }
        }
        panic!("arc {a} has no partner slot")
    }

    pub fn next_label(&self) -> u32 {
        self.sites.iter().flat_map(|s| s.arcs).max().unwrap_or(0) + 1
    }

    pub fn next_id(&self) -> usize {
        self.sites.iter().map(|s| s.id).max().unwrap_or(0) + 1
    }

    fn validate(&self) -> Result<()> {
        let mut ids: Vec<usize> = self.sites.iter().map(|s| s.id).collect();
        ids.dedup();
        if ids.len() != self.sites.len() {
            return Err(Error::InvalidDiagram("duplicate site id".into()));
        }
        for (a, slots) in self.occurrences() {
            if a == 0 {
                return Err(Error::InvalidDiagram("arc labels must be positive".into()));
            }
            if slots.len() != 2 {
                return Err(Error::InvalidDiagram(format!("arc {a} appears {} times", slots.len())));
            }
        }
        self.check_planar()?;
        if let Some(o) = &self.orientation {
            if o.len() != self.sites.len() {
                return Err(Error::InvalidDiagram("orientation length".into()));
            }
            for (a, slots) in self.occurrences() {
                let ins = slots.iter().filter(|&&(i, p)| o[i][p]).count();
                if ins != 1 {
                    return Err(Error::InvalidDiagram(format!("arc {a} is not directed")));
                }
            }
            if !self.check_orientation() {
                return Err(Error::InvalidDiagram("inconsistent orientation".into()));
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> DiagramStats {
        let c = self.crossing_count();
        let m = self.marker_count();
        let signs = self.crossing_signs();
        let (p, n, w) = match signs {
            Some(s) => {
                let p = s.iter().filter(|(_, x)| *x == Sign::Positive).count();
                let n = s.len() - p;
                (Some(p), Some(n), Some(p as i64 - n as i64))
            }
            None => (None, None, None),
        };
        DiagramStats { c, m, p, n, w }
    }

    /// Sign of each crossing `(site id, sign)`; `None` without orientation, unless there are
    /// no crossings at all.
    pub fn crossing_signs(&self) -> Option<Vec<(usize, Sign)>> {
        if self.crossing_count() == 0 {
            return Some(Vec::new());
        }
        let o = self.orientation.as_ref()?;
        Some(
            self.sites
                .iter()
                .zip(o)
                .filter(|(s, _)| s.kind == SiteKind::Crossing)
                .map(|(s, f)| {
                    // Under strand a→c with over strand d→b is positive.
                    let positive = (f[0] && f[3]) || (f[2] && f[1]);
                    (s.id, if positive { Sign::Positive } else { Sign::Negative })
                })
                .collect(),
        )
    }

    /// Orientation pattern check at every site.
    pub fn check_orientation(&self) -> bool {
        let Some(o) = &self.orientation else { return false };
        self.sites.iter().zip(o).all(|(s, f)| match s.kind {
            SiteKind::Crossing => f[0] != f[2] && f[1] != f[3],
            SiteKind::Marker => f[0] == f[2] && f[1] == f[3] && f[0] != f[1],
        })
    }

    pub fn splice(&self, s: SpliceState) -> Result<MarkedDiagram> {
        let i = self.site_index(s.site)?;
        let pairs = splice_pairs(self.sites[i].kind, s.state);
        Ok(self.rewire(&[i], &pairs.map(|(a, b)| ((i, a), (i, b)))))
    }

    /// Splices every marker: `+` uses state ∞, `−` uses state 0.
    pub fn resolution(&self, sign: Sign) -> MarkedDiagram {
        let state = match sign {
            Sign::Positive => State::Infinity,
            Sign::Negative => State::Zero,
        };
        let removed: Vec<usize> = (0..self.sites.len()).filter(|&i| self.sites[i].kind == SiteKind::Marker).collect();
        let links: Vec<(Slot, Slot)> = removed
            .iter()
            .flat_map(|&i| splice_pairs(SiteKind::Marker, state).map(|(a, b)| ((i, a), (i, b))))
            .collect();
        self.rewire(&removed, &links)
    }

    /// Number of circles once every site is spliced by `state_of(site index)`.
    pub fn count_state_components(&self, state_of: &dyn Fn(usize) -> State) -> usize {
        let n = self.sites.len();
        let mut ds = DisjointSet::new(4 * n);
        for (_, slots) in self.occurrences() {
            ds.union(4 * slots[0].0 + slots[0].1, 4 * slots[1].0 + slots[1].1);
        }
        for (i, s) in self.sites.iter().enumerate() {
            for (a, b) in splice_pairs(s.kind, state_of(i)) {
                ds.union(4 * i + a, 4 * i + b);
            }
        }
        ds.count_roots() + self.free_loops as usize
    }

    /// Circle count of a fully spliced diagram.
    pub fn count_components(&self) -> Result<usize> {
        if !self.sites.is_empty() {
            return Err(Error::SitesRemain);
        }
        Ok(self.free_loops as usize)
    }

    /// Connected components of the underlying graph, as lists of site indices.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.sites.len();
        let mut ds = DisjointSet::new(n);
        for (_, slots) in self.occurrences() {
            ds.union(slots[0].0, slots[1].0);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            groups.entry(ds.find(i)).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// A disjoint union; labels and ids of `other` are shifted.
    pub fn disjoint_union(&self, other: &MarkedDiagram) -> MarkedDiagram {
        let dl = self.next_label() - 1;
        let di = self.next_id() - 1;
        let mut sites = self.sites.clone();
        sites.extend(other.sites.iter().map(|s| Site { id: s.id + di, kind: s.kind, arcs: s.arcs.map(|a| a + dl) }));
        let orientation = match (&self.orientation, &other.orientation) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            (Some(a), None) if other.sites.is_empty() => Some(a.clone()),
            (None, Some(b)) if self.sites.is_empty() => Some(b.clone()),
            _ => None,
        };
        MarkedDiagram::new_unchecked(sites, self.free_loops + other.free_loops, orientation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kink() -> MarkedDiagram {
        MarkedDiagram::new(vec![Site { id: 1, kind: SiteKind::Crossing, arcs: [1, 2, 2, 1] }], 0, None).unwrap()
    }

    #[test]
    fn kink_splices() {
        let d = kink();
        let zero = d.splice(SpliceState { site: 1, state: State::Zero }).unwrap();
        assert_eq!(zero.count_components().unwrap(), 1);
        let inf = d.splice(SpliceState { site: 1, state: State::Infinity }).unwrap();
        assert_eq!(inf.count_components().unwrap(), 2);
        assert_eq!(d.count_components(), Err(Error::SitesRemain));
        assert_eq!(d.splice(SpliceState { site: 9, state: State::Zero }).err(), Some(Error::UnknownSite(9)));
    }

    #[test]
    fn state_components_match_splicing() {
        let d = kink();
        assert_eq!(d.count_state_components(&|_| State::Zero), 1);
        assert_eq!(d.count_state_components(&|_| State::Infinity), 2);
        assert_eq!(MarkedDiagram::trivial(3).count_components().unwrap(), 3);
    }

    #[test]
    fn label_counts_are_checked() {
        let bad = MarkedDiagram::new(vec![Site { id: 1, kind: SiteKind::Crossing, arcs: [1, 2, 3, 1] }], 0, None);
        assert!(matches!(bad, Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn marker_with_all_edges_inward_is_not_oriented() {
        let sites = vec![
            Site { id: 1, kind: SiteKind::Marker, arcs: [1, 2, 3, 4] },
            Site { id: 2, kind: SiteKind::Marker, arcs: [1, 4, 3, 2] },
        ];
        let d = MarkedDiagram::new_unchecked(sites, 0, Some(vec![[true; 4], [false; 4]]));
        assert!(!d.check_orientation());
    }
}
