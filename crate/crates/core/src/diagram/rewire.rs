//! Removing sites and reconnecting the loose ends.

use std::collections::HashMap;

use super::{MarkedDiagram, Site, Slot};

impl MarkedDiagram {
    /// Deletes the sites at `removed` (indices) and joins their slots pairwise by `links`.
    /// Each surviving strand keeps the label of the slot it is first reached from; closed
    /// cycles through removed slots become free loops. Orientation survives when the result is
    /// still consistently directed.
    pub fn rewire(&self, removed: &[usize], links: &[(Slot, Slot)]) -> MarkedDiagram {
        let is_removed = |i: usize| removed.contains(&i);
        let mut link: HashMap<Slot, Slot> = HashMap::new();
        for &(a, b) in links {
            link.insert(a, b);
            link.insert(b, a);
        }
        let occ = self.occurrences();
        let other = |s: Slot| -> Slot {
            let v = &occ[&self.label(s)];
            if v[0] == s {
                v[1]
            } else {
                v[0]
            }
        };

        let mut new_arcs: Vec<[u32; 4]> = self.sites().iter().map(|s| s.arcs).collect();
        let mut done: HashMap<Slot, bool> = HashMap::new();
        let mut visited_removed: HashMap<Slot, bool> = HashMap::new();
        for (i, site) in self.sites().iter().enumerate() {
            if is_removed(i) {
                continue;
            }
            for p in 0..4 {
                let s = (i, p);
                if done.contains_key(&s) {
                    continue;
                }
                let label = site.arcs[p];
                let mut t = other(s);
                while is_removed(t.0) {
                    visited_removed.insert(t, true);
                    let u = link[&t];
                    visited_removed.insert(u, true);
                    t = other(u);
                }
                new_arcs[t.0][t.1] = label;
                done.insert(s, true);
                done.insert(t, true);
            }
        }

        let mut loops = self.free_loops();
        for &i in removed {
            for p in 0..4 {
                let r = (i, p);
                if visited_removed.contains_key(&r) {
                    continue;
                }
                let mut t = r;
                loop {
                    visited_removed.insert(t, true);
                    let u = other(t);
                    visited_removed.insert(u, true);
                    t = link[&u];
                    if t == r {
                        break;
                    }
                }
                loops += 1;
            }
        }

        let sites: Vec<Site> = self
            .sites()
            .iter()
            .enumerate()
            .filter(|(i, _)| !is_removed(*i))
            .map(|(i, s)| Site { id: s.id, kind: s.kind, arcs: new_arcs[i] })
            .collect();
        let orientation = self.orientation().map(|o| {
            o.iter()
                .enumerate()
                .filter(|(i, _)| !is_removed(*i))
                .map(|(_, f)| *f)
                .collect::<Vec<_>>()
        });
        let mut d = MarkedDiagram::new_unchecked(sites, loops, orientation);
        if d.is_oriented() && !d.arcs_directed() {
            d = d.without_orientation();
        }
        d
    }

    /// Every arc has exactly one incoming end.
    pub(super) fn arcs_directed(&self) -> bool {
        let Some(o) = self.orientation() else { return false };
        self.occurrences().values().all(|v| v.iter().filter(|&&(i, p)| o[i][p]).count() == 1)
    }
}
