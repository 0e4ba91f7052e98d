//! Reidemeister and marked-graph moves: constructive R1–R3, simplification, and invariance
//! checks against a fixture corpus of before/after pairs.

mod fixtures;
mod reidemeister;
mod simplify;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::evaluate::NormalizerKind;
use crate::magma::MarkedReport;

pub use fixtures::{load_fixtures, marked_flags, verify_invariance, FixturePair, InvarianceReport, MoveOutcome};
pub use reidemeister::{
    apply_marker_kink, apply_r1, apply_r2, apply_r3, bigons, kinks, remove_r1, remove_r2, triangles, ArcRef, Kink, LoopSide, R2Strand,
    Triangle,
};
pub use simplify::{is_admissible, simplify, simplify_seeded, Admissibility, Simplified};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Pos,
    R1Neg,
    R2,
    R3,
    G1,
    G2,
    G3,
    G4,
    G4Prime,
    G5,
    G6,
    G6Prime,
    G7,
    G8,
}

impl MoveKind {
    pub fn all() -> &'static [MoveKind] {
        use MoveKind::*;
        &[R1Pos, R1Neg, R2, R3, G1, G2, G3, G4, G4Prime, G5, G6, G6Prime, G7, G8]
    }

    /// Whether invariance follows from the magma's flags and the normalizers in use.
    pub fn guaranteed(self, r: &MarkedReport, normalizers: &[NormalizerKind]) -> bool {
        use MoveKind::*;
        let rho = normalizers.iter().any(|k| matches!(k, NormalizerKind::RhoWrithe | NormalizerKind::RhoParity));
        let phi = normalizers.contains(&NormalizerKind::PhiMarker);
        match self {
            R2 | R3 | G2 | G3 | G4 | G4Prime | G5 => true,
            G7 | G8 => r.period2 && r.mixed_entropic,
            G6 | G6Prime => r.period2 && r.mixed_entropic && (r.bullet_absorbing || phi),
            R1Pos | R1Neg | G1 => rho,
        }
    }

    pub fn ascii(self) -> &'static str {
        use MoveKind::*;
        match self {
            R1Pos => "R1+",
            R1Neg => "R1-",
            R2 => "R2",
            R3 => "R3",
            G1 => "G1",
            G2 => "G2",
            G3 => "G3",
            G4 => "G4",
            G4Prime => "G4'",
            G5 => "G5",
            G6 => "G6",
            G6Prime => "G6'",
            G7 => "G7",
            G8 => "G8",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.ascii();
        match s.strip_prefix('G') {
            Some(rest) => write!(f, "Γ{}", rest.replace('\'', "′")),
            None => f.write_str(&s.replace('-', "−")),
        }
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('Γ', "G").replace('′', "'").replace('−', "-");
        MoveKind::all()
            .iter()
            .copied()
            .find(|k| k.ascii().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown move `{s}`") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in MoveKind::all() {
            assert_eq!(k.to_string().parse::<MoveKind>().unwrap(), *k);
            assert_eq!(k.ascii().parse::<MoveKind>().unwrap(), *k);
        }
        assert_eq!(MoveKind::G4Prime.to_string(), "Γ4′");
        assert!("G9".parse::<MoveKind>().is_err());
    }

    #[test]
    fn guarantees_follow_flags() {
        let full = MarkedReport { period2: true, mixed_entropic: true, bullet_absorbing: true, mixed_residual: "0".into() };
        assert!(MoveKind::G6.guaranteed(&full, &[]));
        assert!(!MoveKind::R1Pos.guaranteed(&full, &[]));
        assert!(MoveKind::G1.guaranteed(&full, &[NormalizerKind::RhoWrithe]));
        let no_abs = MarkedReport { bullet_absorbing: false, ..full.clone() };
        assert!(!MoveKind::G6Prime.guaranteed(&no_abs, &[]));
        assert!(MoveKind::G6Prime.guaranteed(&no_abs, &[NormalizerKind::PhiMarker]));
        let none = MarkedReport { period2: false, ..full };
        assert!(!MoveKind::G8.guaranteed(&none, &[]));
        assert!(MoveKind::G5.guaranteed(&none, &[]));
    }
}
