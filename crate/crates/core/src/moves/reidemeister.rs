//! Constructive Reidemeister moves and their inverses.

use crate::diagram::{MarkedDiagram, Sign, Site, SiteKind, Slot};
use crate::error::{Error, Result};

/// An arc by label, or one of the crossing-free circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcRef {
    Label(u32),
    FreeLoop,
}

/// Side of the new loop, looking along the arc from its first occurrence to its second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopSide {
    Left,
    Right,
}

/// One strand of an R2 move: the arc leaving slot `pos` of site `site`, with the shared face
/// on its left, or a crossing-free circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R2Strand {
    Slot { site: usize, pos: usize },
    FreeLoop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Kink {
    pub site: usize,
    pub sign: Sign,
}

/// Three face slots `(site id, position)` of a triangular face, in face order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub slots: [(usize, usize); 3],
}

#[derive(Clone, Copy)]
enum Tok {
    K,
    K2,
    L,
}

/// Rebuilds a diagram after a local change, carrying the orientation over from the sites
/// that were not touched.
pub(crate) fn finish(old: &MarkedDiagram, sites: Vec<Site>, loops: u32, touched: &[usize]) -> Result<MarkedDiagram> {
    let bare = MarkedDiagram::new(sites, loops, None)?;
    if !old.is_oriented() && !old.sites().is_empty() {
        return Ok(bare);
    }
    let seeds: Vec<[Option<bool>; 4]> = bare
        .sites()
        .iter()
        .map(|s| {
            if touched.contains(&s.id) {
                return [None; 4];
            }
            match (old.site_index(s.id), old.orientation()) {
                (Ok(i), Some(o)) => o[i].map(Some),
                _ => [None; 4],
            }
        })
        .collect();
    Ok(bare.complete_orientation(&seeds).unwrap_or(bare))
}

fn insert_kink(d: &MarkedDiagram, arc: ArcRef, kind: SiteKind, template: [Tok; 4]) -> Result<MarkedDiagram> {
    let l = d.next_label();
    let mut sites = d.sites().to_vec();
    let mut loops = d.free_loops();
    let (k, k2) = match arc {
        ArcRef::Label(k) => {
            let occ = d.occurrences();
            let slots = occ.get(&k).ok_or(Error::UnknownArc(k))?;
            let (i, p) = slots[1];
            sites[i].arcs[p] = l + 1;
            (k, l + 1)
        }
        ArcRef::FreeLoop => {
            if loops == 0 {
                return Err(Error::MoveNotApplicable("no free loop".into()));
            }
            loops -= 1;
            (l + 1, l + 1)
        }
    };
    let arcs = template.map(|t| match t {
        Tok::K => k,
        Tok::K2 => k2,
        Tok::L => l,
    });
    let id = d.next_id();
    sites.push(Site { id, kind, arcs });
    finish(d, sites, loops, &[id])
}

/// Adds a kink of the given sign on `arc`.
pub fn apply_r1(d: &MarkedDiagram, arc: ArcRef, sign: Sign, side: LoopSide) -> Result<MarkedDiagram> {
    use Tok::*;
    let template = match (sign, side) {
        (Sign::Positive, LoopSide::Left) => [K, K2, L, L],
        (Sign::Positive, LoopSide::Right) => [L, L, K2, K],
        (Sign::Negative, LoopSide::Right) => [K, L, L, K2],
        (Sign::Negative, LoopSide::Left) => [L, K, K2, L],
    };
    insert_kink(d, arc, SiteKind::Crossing, template)
}

/// Adds a marker kink whose loop closes off in the ∞ state (`prime == false`) or in the 0
/// state (`prime == true`).
pub fn apply_marker_kink(d: &MarkedDiagram, arc: ArcRef, prime: bool) -> Result<MarkedDiagram> {
    use Tok::*;
    let template = if prime { [K, L, L, K2] } else { [K, K2, L, L] };
    insert_kink(d, arc, SiteKind::Marker, template)
}

fn kink_loop(s: &Site) -> Option<usize> {
    (0..4).find(|&p| s.arcs[p] == s.arcs[(p + 1) % 4])
}

/// Crossings that close a one-site loop.
pub fn kinks(d: &MarkedDiagram) -> Vec<Kink> {
    d.sites()
        .iter()
        .filter(|s| s.kind == SiteKind::Crossing)
        .filter_map(|s| {
            let p = kink_loop(s)?;
            let sign = if p % 2 == 0 { Sign::Positive } else { Sign::Negative };
            Some(Kink { site: s.id, sign })
        })
        .collect()
}

/// Removes the kink at `site`; also returns its sign.
pub fn remove_r1(d: &MarkedDiagram, site: usize) -> Result<(MarkedDiagram, Sign)> {
    let i = d.site_index(site)?;
    let s = &d.sites()[i];
    let p = match (s.kind, kink_loop(s)) {
        (SiteKind::Crossing, Some(p)) => p,
        _ => return Err(Error::MoveNotApplicable(format!("site {site} is not a kink"))),
    };
    let sign = if p % 2 == 0 { Sign::Positive } else { Sign::Negative };
    let links = [((i, p), (i, (p + 1) % 4)), ((i, (p + 2) % 4), (i, (p + 3) % 4))];
    let r = d.rewire(&[i], &links);
    // The kink's own loop closes up as a spurious circle.
    Ok((r.with_free_loops(r.free_loops() - 1), sign))
}

fn face_of(d: &MarkedDiagram, s: Slot) -> Vec<Slot> {
    let mut out = vec![s];
    let mut t = d.face_step(s);
    while t != s {
        out.push(t);
        t = d.face_step(t);
    }
    out
}

/// Two strands crossing twice, `over` on top. Labelled strands must share a face.
pub fn apply_r2(d: &MarkedDiagram, over: R2Strand, under: R2Strand) -> Result<MarkedDiagram> {
    let mut sites = d.sites().to_vec();
    let mut loops = d.free_loops();
    let slot = |st: R2Strand| -> Result<Option<Slot>> {
        match st {
            R2Strand::Slot { site, pos } if pos < 4 => Ok(Some((d.site_index(site)?, pos))),
            R2Strand::Slot { .. } => Err(Error::MoveNotApplicable("slot position out of range".into())),
            R2Strand::FreeLoop => Ok(None),
        }
    };
    let (s1, s2) = (slot(over)?, slot(under)?);
    let needed = [s1, s2].iter().filter(|s| s.is_none()).count() as u32;
    if loops < needed {
        return Err(Error::MoveNotApplicable("not enough free loops".into()));
    }
    loops -= needed;
    if let (Some(a), Some(b)) = (s1, s2) {
        if d.label(a) == d.label(b) {
            return Err(Error::MoveNotApplicable("strands must lie on different arcs".into()));
        }
        if !face_of(d, a).contains(&b) {
            return Err(Error::MoveNotApplicable("strands do not share a face".into()));
        }
    }
    let l = d.next_label();
    let (oa, ob, oc, ua, ub, uc) = (l, l + 1, l + 2, l + 3, l + 4, l + 5);
    let (oc, uc) = (if s1.is_none() { oa } else { oc }, if s2.is_none() { ua } else { uc });
    if let Some(a) = s1 {
        let t = d.partner(a);
        sites[a.0].arcs[a.1] = oa;
        sites[t.0].arcs[t.1] = oc;
    }
    if let Some(b) = s2 {
        let t = d.partner(b);
        sites[b.0].arcs[b.1] = ua;
        sites[t.0].arcs[t.1] = uc;
    }
    let id = d.next_id();
    sites.push(Site { id, kind: SiteKind::Crossing, arcs: [ub, ob, uc, oa] });
    sites.push(Site { id: id + 1, kind: SiteKind::Crossing, arcs: [ua, ob, ub, oc] });
    finish(d, sites, loops, &[id, id + 1])
}

/// Pairs of crossings bounding a bigon that one strand passes over twice.
pub fn bigons(d: &MarkedDiagram) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for f in d.faces() {
        if f.len() != 2 {
            continue;
        }
        let (a, b) = (f.slots[0], f.slots[1]);
        let sa = &d.sites()[a.0];
        let sb = &d.sites()[b.0];
        if a.0 == b.0 || sa.kind != SiteKind::Crossing || sb.kind != SiteKind::Crossing {
            continue;
        }
        let end = d.partner(a);
        if a.1 % 2 == end.1 % 2 {
            let pair = (sa.id.min(sb.id), sa.id.max(sb.id));
            if !out.contains(&pair) {
                out.push(pair);
            }
        }
    }
    out
}

/// Undoes an R2 move at the bigon between two crossings.
pub fn remove_r2(d: &MarkedDiagram, a: usize, b: usize) -> Result<MarkedDiagram> {
    let pair = (a.min(b), a.max(b));
    if !bigons(d).contains(&pair) {
        return Err(Error::MoveNotApplicable(format!("sites {a} and {b} do not bound a removable bigon")));
    }
    let (i, j) = (d.site_index(a)?, d.site_index(b)?);
    let links = [((i, 0), (i, 2)), ((i, 1), (i, 3)), ((j, 0), (j, 2)), ((j, 1), (j, 3))];
    Ok(d.rewire(&[i, j], &links))
}

/// Triangular faces where an R3 move applies.
pub fn triangles(d: &MarkedDiagram) -> Vec<Triangle> {
    let mut out = Vec::new();
    for f in d.faces() {
        if f.len() != 3 {
            continue;
        }
        let ids: Vec<usize> = f.slots.iter().map(|s| s.0).collect();
        if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
            continue;
        }
        if f.slots.iter().any(|s| d.sites()[s.0].kind != SiteKind::Crossing) {
            continue;
        }
        let par: Vec<usize> = f.slots.iter().map(|s| s.1 % 2).collect();
        if par[0] == par[1] && par[1] == par[2] {
            continue;
        }
        let slots = [0, 1, 2].map(|k| (d.sites()[f.slots[k].0].id, f.slots[k].1));
        out.push(Triangle { slots });
    }
    out
}

/// Moves the third strand across the crossing of the other two.
pub fn apply_r3(d: &MarkedDiagram, t: &Triangle) -> Result<MarkedDiagram> {
    let valid = triangles(d).iter().any(|u| {
        (0..3).any(|r| (0..3).all(|k| u.slots[(k + r) % 3] == t.slots[k]))
    });
    if !valid {
        return Err(Error::MoveNotApplicable("not an R3 triangle".into()));
    }
    let v: Vec<usize> = t.slots.iter().map(|s| d.site_index(s.0)).collect::<Result<_>>()?;
    let p: Vec<usize> = t.slots.iter().map(|s| s.1).collect();
    let lab = |i: usize, q: usize| d.sites()[v[i]].arcs[q % 4];
    let x: Vec<u32> = (0..3).map(|k| lab(k, p[k] + 2)).collect();
    let y: Vec<u32> = (0..3).map(|k| lab((k + 1) % 3, p[(k + 1) % 3] + 3)).collect();
    let l = d.next_label();
    let g = [l, l + 1, l + 2];
    let mut sites = d.sites().to_vec();
    for k in 0..3 {
        let prev = (k + 2) % 3;
        let mut arcs = [0u32; 4];
        arcs[p[k]] = y[k];
        arcs[(p[k] + 1) % 4] = x[prev];
        arcs[(p[k] + 2) % 4] = g[k];
        arcs[(p[k] + 3) % 4] = g[prev];
        sites[v[k]].arcs = arcs;
    }
    let touched: Vec<usize> = t.slots.iter().map(|s| s.0).collect();
    finish(d, sites, d.free_loops(), &touched)
}
