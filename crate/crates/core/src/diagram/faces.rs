//! Faces of the underlying 4-valent plane graph.

use super::{MarkedDiagram, Slot};
use crate::error::{Error, Result};

/// A face as the cyclic list of slots whose outgoing arc has the face on its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub slots: Vec<Slot>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

impl MarkedDiagram {
    /// Successor of a slot along its face: cross the arc, then turn to the previous slot.
    pub fn face_step(&self, s: Slot) -> Slot {
        let (j, q) = self.partner(s);
        (j, (q + 3) % 4)
    }

    pub fn faces(&self) -> Vec<Face> {
        let n = self.sites().len();
        let mut seen = vec![[false; 4]; n];
        let mut out = Vec::new();
        for i in 0..n {
            for p in 0..4 {
                if seen[i][p] {
                    continue;
                }
                let mut slots = Vec::new();
                let mut s = (i, p);
                while !seen[s.0][s.1] {
                    seen[s.0][s.1] = true;
                    slots.push(s);
                    s = self.face_step(s);
                }
                out.push(Face { slots });
            }
        }
        out
    }

    /// Euler characteristic 2 on every connected component.
    pub(super) fn check_planar(&self) -> Result<()> {
        let comps = self.graph_components();
        let mut comp_of = vec![0; self.sites().len()];
        for (k, c) in comps.iter().enumerate() {
            for &i in c {
                comp_of[i] = k;
            }
        }
        let mut f = vec![0i64; comps.len()];
        for face in self.faces() {
            f[comp_of[face.slots[0].0]] += 1;
        }
        for (k, c) in comps.iter().enumerate() {
            let v = c.len() as i64;
            let e = 2 * v;
            if v - e + f[k] != 2 {
                return Err(Error::InvalidDiagram(format!(
                    "not planar: component with {v} sites has {} faces",
                    f[k]
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::{MarkedDiagram, Site, SiteKind};

    fn x(id: usize, arcs: [u32; 4]) -> Site {
        Site { id, kind: SiteKind::Crossing, arcs }
    }

    #[test]
    fn trefoil_has_five_faces() {
        let d = MarkedDiagram::new(vec![x(1, [1, 5, 2, 4]), x(2, [3, 1, 4, 6]), x(3, [5, 3, 6, 2])], 0, None).unwrap();
        let mut lens: Vec<usize> = d.faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn non_planar_code_is_rejected() {
        let r = MarkedDiagram::new(vec![x(1, [1, 2, 1, 2])], 0, None);
        assert!(r.is_err());
    }
}
