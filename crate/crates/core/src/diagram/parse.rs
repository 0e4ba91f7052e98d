//! The `.mkd` text format.
//!
//! ```text
//! # trefoil
//! X 1 5 2 4
//! X 3 1 4 6
//! X 5 3 6 2
//! O 1
//! orient 1 +
//! ```
//! Sites get ids 1, 2, ... in file order. `O k` adds `k` crossing-free circles. `orient k +`
//! directs arc `k` away from its first occurrence (sites in file order, slots left to right);
//! `-` the other way. Either every arc is oriented or none is.

use std::collections::BTreeMap;
use std::fmt;

use super::{MarkedDiagram, Site, SiteKind};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl MarkedDiagram {
    pub fn parse(text: &str) -> Result<MarkedDiagram> {
        let mut sites = Vec::new();
        let mut loops = 0u32;
        let mut orient: BTreeMap<u32, (bool, usize)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| w.parse::<u32>().map_err(|_| perr(ln, format!("bad number `{w}`")));
            match words[0] {
                "X" | "M" => {
                    if words.len() != 5 {
                        return Err(perr(ln, "a site needs four arc labels"));
                    }
                    let mut arcs = [0u32; 4];
                    for k in 0..4 {
                        arcs[k] = num(words[k + 1])?;
                        if arcs[k] == 0 {
                            return Err(perr(ln, "arc labels start at 1"));
                        }
                    }
                    let kind = if words[0] == "X" { SiteKind::Crossing } else { SiteKind::Marker };
                    sites.push(Site { id: sites.len() + 1, kind, arcs });
                }
                "O" => {
                    if words.len() != 2 {
                        return Err(perr(ln, "expected `O count`"));
                    }
                    loops += num(words[1])?;
                }
                "orient" => {
                    if words.len() != 3 {
                        return Err(perr(ln, "expected `orient arc +|-`"));
                    }
                    let arc = num(words[1])?;
                    let fwd = match words[2] {
                        "+" => true,
                        "-" => false,
                        w => return Err(perr(ln, format!("bad direction `{w}`"))),
                    };
                    if orient.insert(arc, (fwd, ln)).is_some() {
                        return Err(perr(ln, format!("arc {arc} oriented twice")));
                    }
                }
                w => return Err(perr(ln, format!("unknown record `{w}`"))),
            }
        }
        let bare = MarkedDiagram::new(sites, loops, None)?;
        if orient.is_empty() {
            return Ok(bare);
        }
        let occ = bare.occurrences();
        for (arc, (_, ln)) in &orient {
            if !occ.contains_key(arc) {
                return Err(perr(*ln, format!("unknown arc {arc}")));
            }
        }
        let mut flags = vec![[false; 4]; bare.sites().len()];
        for (arc, slots) in &occ {
            let (fwd, _) = orient.get(arc).ok_or_else(|| perr(0, format!("arc {arc} has no orientation")))?;
            let (first, second) = (slots[0], slots[1]);
            let into = if *fwd { second } else { first };
            flags[into.0][into.1] = true;
        }
        let d = MarkedDiagram::new_unchecked(bare.sites().to_vec(), loops, Some(flags));
        if !d.check_orientation() {
            return Err(Error::InvalidDiagram("orientation is inconsistent at a site".into()));
        }
        Ok(d.normalize_crossing_rotation())
    }

    pub fn to_mkd(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.sites() {
            let k = match s.kind {
                SiteKind::Crossing => 'X',
                SiteKind::Marker => 'M',
            };
            writeln!(f, "{k} {} {} {} {}", s.arcs[0], s.arcs[1], s.arcs[2], s.arcs[3])?;
        }
        if self.free_loops() > 0 {
            writeln!(f, "O {}", self.free_loops())?;
        }
        if let Some(o) = self.orientation() {
            for (arc, slots) in self.occurrences() {
                let (i, p) = slots[1];
                writeln!(f, "orient {arc} {}", if o[i][p] { '+' } else { '-' })?;
            }
        }
        Ok(())
    }
}
