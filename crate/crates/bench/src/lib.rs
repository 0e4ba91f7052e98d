//! Fixture diagrams shared by the benchmarks.

use skeinmagma::MarkedDiagram;

pub const FIXTURES: [(&str, &str); 4] = [
    ("3_1", include_str!("../../core/fixtures/diagrams/3_1.mkd")),
    ("2_1m", include_str!("../../core/fixtures/diagrams/2_1m.mkd")),
    ("6_1_01", include_str!("../../core/fixtures/diagrams/6_1_01.mkd")),
    ("spun_trefoil", include_str!("../../core/fixtures/diagrams/spun_trefoil.mkd")),
];

pub fn fixture(name: &str) -> MarkedDiagram {
    let text = FIXTURES.iter().find(|f| f.0 == name).map(|f| f.1).expect("known fixture");
    MarkedDiagram::parse(text).expect("fixture parses")
}

/// A chain of `n` crossings closing into a torus link diagram, for scaling runs.
pub fn twist(n: u32) -> MarkedDiagram {
    let lines: Vec<String> = (0..n)
        .map(|i| {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            let (c, d) = ((2 * i + 2) % (2 * n) + 1, (2 * i + 3) % (2 * n) + 1);
            format!("X {a} {c} {d} {b}")
        })
        .collect();
    MarkedDiagram::parse(&lines.join("\n")).expect("twist diagram parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        for (name, _) in FIXTURES {
            fixture(name);
        }
        for n in 2..6 {
            assert_eq!(twist(n).crossing_count(), n as usize);
        }
    }
}
