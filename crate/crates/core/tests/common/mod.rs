#![allow(dead_code)]

use std::path::PathBuf;

use skeinmagma::magma::builtin;
use skeinmagma::moves::{load_fixtures, FixturePair};
use skeinmagma::{MagmaSpec, MarkedDiagram, RingElement};

pub const DIAGRAMS: [&str; 7] = ["0_1", "2_1m", "3_1", "6_1_01", "O3", "rp2", "spun_trefoil"];

pub const MARKED: [&str; 6] = ["mkb-affine", "mkb-affine-x", "mkb-poly", "mkb-quotient", "mkb-lee", "mkb-phi"];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn diagram(name: &str) -> MarkedDiagram {
    let path = fixtures().join("diagrams").join(format!("{name}.mkd"));
    MarkedDiagram::parse(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn all_diagrams() -> Vec<(&'static str, MarkedDiagram)> {
    DIAGRAMS.iter().map(|n| (*n, diagram(n))).collect()
}

pub fn pairs() -> Vec<FixturePair> {
    load_fixtures(&fixtures().join("moves")).unwrap()
}

pub fn magma(name: &str) -> MagmaSpec {
    builtin(name).unwrap()
}

pub fn elem(m: &MagmaSpec, text: &str) -> RingElement {
    m.carrier.parse(text).unwrap()
}

pub fn assert_eq_in(m: &MagmaSpec, got: &RingElement, want: &str) {
    let w = elem(m, want);
    assert!(got.eq(&w).unwrap(), "{}: got {got}, want {w}", m.name);
}
