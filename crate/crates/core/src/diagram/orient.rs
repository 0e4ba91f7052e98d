//! Finding an orientation compatible with every site.

use super::{MarkedDiagram, Site, SiteKind};

impl MarkedDiagram {
    /// Some consistent orientation, or `None` when the diagram admits none (for example when
    /// a marked vertex sits on a non-orientable surface). Crossings are rotated so that slot
    /// `a` is incoming.
    pub fn auto_orient(&self) -> Option<MarkedDiagram> {
        self.complete_orientation(&vec![[None; 4]; self.sites().len()])
    }

    /// Extends per-slot seed flags to a consistent orientation. Components without seeds get
    /// an arbitrary direction. `None` when the seeds conflict or no orientation exists.
    pub fn complete_orientation(&self, seeds: &[[Option<bool>; 4]]) -> Option<MarkedDiagram> {
        let n = self.sites().len();
        // Each slot gets a parity; edges say "equal" (false) or "different" (true).
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); 4 * n];
        let mut edge = |a: usize, b: usize, diff: bool| {
            adj[a].push((b, diff));
            adj[b].push((a, diff));
        };
        for slots in self.occurrences().values() {
            edge(4 * slots[0].0 + slots[0].1, 4 * slots[1].0 + slots[1].1, true);
        }
        for (i, s) in self.sites().iter().enumerate() {
            let b = 4 * i;
            match s.kind {
                SiteKind::Crossing => {
                    edge(b, b + 2, true);
                    edge(b + 1, b + 3, true);
                }
                SiteKind::Marker => {
                    edge(b, b + 2, false);
                    edge(b + 1, b + 3, false);
                    edge(b, b + 1, true);
                }
            }
        }
        let mut val: Vec<Option<bool>> = vec![None; 4 * n];
        let seeded = (0..4 * n).filter(|&x| seeds[x / 4][x % 4].is_some());
        let order: Vec<usize> = seeded.chain(0..4 * n).collect();
        for start in order {
            if val[start].is_some() {
                continue;
            }
            val[start] = Some(seeds[start / 4][start % 4].unwrap_or(true));
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let vx = val[x].unwrap();
                for &(y, diff) in &adj[x] {
                    let want = vx ^ diff;
                    match val[y] {
                        None => {
                            if seeds[y / 4][y % 4].is_some_and(|v| v != want) {
                                return None;
                            }
                            val[y] = Some(want);
                            stack.push(y);
                        }
                        Some(v) if v != want => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut sites = Vec::with_capacity(n);
        let mut flags = Vec::with_capacity(n);
        for (i, s) in self.sites().iter().enumerate() {
            let mut f = [0, 1, 2, 3].map(|p| val[4 * i + p].unwrap());
            let mut arcs = s.arcs;
            if s.kind == SiteKind::Crossing && !f[0] {
                arcs = [arcs[2], arcs[3], arcs[0], arcs[1]];
                f = [f[2], f[3], f[0], f[1]];
            }
            sites.push(Site { id: s.id, kind: s.kind, arcs });
            flags.push(f);
        }
        Some(MarkedDiagram::new_unchecked(sites, self.free_loops(), Some(flags)))
    }

    /// Reverses every arc.
    pub fn reversed(&self) -> MarkedDiagram {
        match self.orientation() {
            None => self.clone(),
            Some(o) => {
                let flags: Vec<[bool; 4]> = o.iter().map(|f| f.map(|b| !b)).collect();
                let d = MarkedDiagram::new_unchecked(self.sites().to_vec(), self.free_loops(), Some(flags));
                d.normalize_crossing_rotation()
            }
        }
    }

    /// Rotates oriented crossings so that slot `a` is incoming.
    pub(super) fn normalize_crossing_rotation(&self) -> MarkedDiagram {
        let Some(o) = self.orientation() else { return self.clone() };
        let mut sites = Vec::new();
        let mut flags = Vec::new();
        for (s, f) in self.sites().iter().zip(o) {
            if s.kind == SiteKind::Crossing && !f[0] {
                sites.push(Site { id: s.id, kind: s.kind, arcs: [s.arcs[2], s.arcs[3], s.arcs[0], s.arcs[1]] });
                flags.push([f[2], f[3], f[0], f[1]]);
            } else {
                sites.push(s.clone());
                flags.push(*f);
            }
        }
        MarkedDiagram::new_unchecked(sites, self.free_loops(), Some(flags))
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::{MarkedDiagram, Site, SiteKind};

    #[test]
    fn trefoil_orients_with_equal_signs() {
        let x = |id, arcs| Site { id, kind: SiteKind::Crossing, arcs };
        let d = MarkedDiagram::new(vec![x(1, [1, 5, 2, 4]), x(2, [3, 1, 4, 6]), x(3, [5, 3, 6, 2])], 0, None).unwrap();
        let o = d.auto_orient().unwrap();
        assert!(o.check_orientation());
        let w = o.stats().w.unwrap();
        assert_eq!(w.abs(), 3);
        assert_eq!(o.reversed().stats().w, Some(w));
    }

    #[test]
    fn projective_plane_marker_has_no_orientation() {
        let d = MarkedDiagram::new(
            vec![
                Site { id: 1, kind: SiteKind::Crossing, arcs: [1, 2, 3, 4] },
                Site { id: 2, kind: SiteKind::Marker, arcs: [2, 1, 4, 3] },
            ],
            0,
            None,
        )
        .unwrap();
        assert!(d.auto_orient().is_none());
    }
}
