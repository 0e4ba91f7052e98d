use std::fmt;
use std::str::FromStr;

use crate::algebra::RingElement;
use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalizerKind {
    /// `param^(-w) · v`
    RhoWrithe,
    /// `v` for an even crossing count, `param - v` otherwise.
    RhoParity,
    /// `param^(-m) · v`, with `param` the localized element.
    PhiMarker,
}

impl NormalizerKind {
    pub fn name(self) -> &'static str {
        match self {
            NormalizerKind::RhoWrithe => "rho-writhe",
            NormalizerKind::RhoParity => "rho-parity",
            NormalizerKind::PhiMarker => "phi-marker",
        }
    }
}

impl fmt::Display for NormalizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormalizerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho-writhe" => Ok(NormalizerKind::RhoWrithe),
            "rho-parity" => Ok(NormalizerKind::RhoParity),
            "phi-marker" => Ok(NormalizerKind::PhiMarker),
            other => Err(Error::UnknownNormalizer(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NormalizerSpec {
    pub kind: NormalizerKind,
    pub param: RingElement,
}

pub fn apply_normalizer(v: &RingElement, d: &MarkedDiagram, spec: &NormalizerSpec) -> Result<RingElement> {
    let param = spec.param.lift_to(v.context())?;
    match spec.kind {
        NormalizerKind::RhoWrithe => {
            let w = d.stats().w.ok_or(Error::MissingOrientation)?;
            param.pow(-w)?.mul(v)
        }
        NormalizerKind::RhoParity => {
            if d.crossing_count().is_multiple_of(2) {
                Ok(v.clone())
            } else {
                param.sub(v)
            }
        }
        NormalizerKind::PhiMarker => param.pow(-(d.marker_count() as i64))?.mul(v),
    }
}
