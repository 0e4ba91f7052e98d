//! Greedy reduction by R1 and R2 removals.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::reidemeister::{bigons, kinks, remove_r1, remove_r2};
use super::MoveKind;
use crate::diagram::{MarkedDiagram, Sign};
use crate::error::{Error, Result};
use crate::evaluate::state_sum;
use crate::magma::builtin;
use crate::unionfind::DisjointSet;

#[derive(Debug, Clone)]
pub struct Simplified {
    pub diagram: MarkedDiagram,
    pub moves: Vec<MoveKind>,
}

/// Always takes the first available move.
pub fn simplify(d: &MarkedDiagram) -> Simplified {
    run(d, &mut |n| (0..n).collect())
}

/// Takes moves in an order shuffled by `seed`.
pub fn simplify_seeded(d: &MarkedDiagram, seed: u64) -> Simplified {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    run(d, &mut |n| {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut rng);
        v
    })
}

fn run(d: &MarkedDiagram, order: &mut dyn FnMut(usize) -> Vec<usize>) -> Simplified {
    let mut cur = d.clone();
    let mut moves = Vec::new();
    loop {
        let ks = kinks(&cur);
        if !ks.is_empty() {
            let k = ks[order(ks.len())[0]];
            let (next, sign) = remove_r1(&cur, k.site).expect("listed kink is removable");
            moves.push(if sign == Sign::Positive { MoveKind::R1Pos } else { MoveKind::R1Neg });
            cur = next;
            continue;
        }
        let bs = bigons(&cur);
        if !bs.is_empty() {
            let (a, b) = bs[order(bs.len())[0]];
            cur = remove_r2(&cur, a, b).expect("listed bigon is removable");
            moves.push(MoveKind::R2);
            continue;
        }
        break;
    }
    Simplified { diagram: cur, moves }
}

/// Number of closed strands of a classical diagram.
pub fn link_components(d: &MarkedDiagram) -> Result<usize> {
    if d.marker_count() > 0 {
        return Err(Error::HasMarkers);
    }
    let n = d.sites().len();
    let mut ds = DisjointSet::new(4 * n);
    for slots in d.occurrences().values() {
        ds.union(4 * slots[0].0 + slots[0].1, 4 * slots[1].0 + slots[1].1);
    }
    for i in 0..n {
        ds.union(4 * i, 4 * i + 2);
        ds.union(4 * i + 1, 4 * i + 3);
    }
    Ok(ds.count_roots() + d.free_loops() as usize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// Simplification did not reach trivial diagrams; the reason names the resolution.
    Unknown(String),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

impl std::fmt::Display for Admissibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Admissibility::Admissible => "admissible",
            Admissibility::Unknown(_) => "unknown",
        })
    }
}

/// Both marker resolutions must simplify to crossing-free diagrams. When one does not, the
/// bracket is consulted only to sharpen the reason: a value that is not a unit multiple of a
/// trivial link's proves the resolution nontrivial.
pub fn is_admissible(d: &MarkedDiagram) -> Result<Admissibility> {
    for (sign, name) in [(Sign::Positive, "L+"), (Sign::Negative, "L-")] {
        let r = d.resolution(sign);
        if simplify(&r).diagram.sites().is_empty() {
            continue;
        }
        let why = if bracket_is_trivial(&r)? {
            format!("{name} did not simplify to a trivial diagram")
        } else {
            format!("{name} is not a trivial link")
        };
        return Ok(Admissibility::Unknown(why));
    }
    Ok(Admissibility::Admissible)
}

fn bracket_is_trivial(r: &MarkedDiagram) -> Result<bool> {
    let kb = builtin("kb-poly")?;
    let v = state_sum(r, &kb)?;
    let trivial = kb.seq(link_components(r)? as i64)?;
    let bound = 4 * r.crossing_count() as i64 + 4;
    for j in -bound..=bound {
        let t = kb.carrier.parse(&format!("A^{j}"))?.mul(&trivial)?;
        if v.eq(&t)? || v.eq(&t.neg())? {
            return Ok(true);
        }
    }
    Ok(false)
}
