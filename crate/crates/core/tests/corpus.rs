//! The move fixture corpus: shape of each pair and the invariance patterns per magma.

mod common;

use common::*;
use skeinmagma::moves::{is_admissible, simplify, simplify_seeded, verify_invariance};
use skeinmagma::MoveKind;

#[test]
fn every_move_has_pairs() {
    let pairs = pairs();
    for k in MoveKind::all() {
        let n = pairs.iter().filter(|p| p.kind == *k).count();
        assert!(n >= 2, "{k}: {n} pairs");
    }
}

#[test]
fn pairs_fit_their_move() {
    for p in pairs() {
        p.check_stats().unwrap();
        for d in [&p.before, &p.after] {
            if !d.sites().is_empty() {
                assert!(d.is_oriented() && d.check_orientation(), "{}", p.name);
            }
        }
    }
}

#[test]
fn quotient_with_writhe_is_invariant_everywhere() {
    let r = verify_invariance(&magma("mkb-quotient"), &["rho-writhe"], &pairs()).unwrap();
    for o in &r.outcomes {
        assert!(o.invariant(), "{} {}", o.kind, o.name);
        assert!(o.guaranteed);
    }
}

#[test]
fn plain_bracket_pattern() {
    use MoveKind::*;
    let r = verify_invariance(&magma("mkb-poly"), &[], &pairs()).unwrap();
    assert!(r.consistent());
    for (kind, all_invariant, guaranteed) in r.by_kind() {
        match kind {
            R2 | R3 | G2 | G3 | G4 | G4Prime | G5 => assert!(all_invariant && guaranteed, "{kind}"),
            R1Pos | R1Neg | G1 | G6 | G6Prime | G7 | G8 => assert!(!all_invariant && !guaranteed, "{kind}"),
        }
    }
}

#[test]
fn phi_handles_marker_kinks() {
    let ps: Vec<_> = pairs().into_iter().filter(|p| matches!(p.kind, MoveKind::G6 | MoveKind::G6Prime)).collect();
    let m = magma("mkb-phi");
    let r = verify_invariance(&m, &["phi-marker"], &ps).unwrap();
    assert!(r.outcomes.iter().all(|o| o.invariant() && o.guaranteed));
    let r = verify_invariance(&m, &[], &ps).unwrap();
    assert!(r.outcomes.iter().any(|o| !o.invariant()));
}

#[test]
fn affine_quotient_is_invariant_except_kinks() {
    let r = verify_invariance(&magma("mkb-affine-x"), &[], &pairs()).unwrap();
    assert!(r.consistent());
    for o in &r.outcomes {
        if !matches!(o.kind, MoveKind::R1Pos | MoveKind::R1Neg | MoveKind::G1) {
            assert!(o.invariant(), "{} {}", o.kind, o.name);
        }
    }
    let r = verify_invariance(&magma("mkb-affine-x"), &["rho-parity"], &pairs()).unwrap();
    assert!(r.outcomes.iter().all(|o| o.invariant()));
}

#[test]
fn admissible_fixtures() {
    for name in ["0_1", "2_1m", "rp2", "6_1_01", "spun_trefoil"] {
        assert!(is_admissible(&diagram(name)).unwrap().is_admissible(), "{name}");
    }
}

#[test]
fn spun_trefoil_resolutions_reduce() {
    let d = diagram("spun_trefoil");
    for sign in [skeinmagma::Sign::Positive, skeinmagma::Sign::Negative] {
        let r = d.resolution(sign);
        assert_eq!(r.marker_count(), 0);
        assert_eq!(r.crossing_count(), d.crossing_count());
        assert!(simplify(&r).diagram.sites().is_empty());
    }
}

#[test]
fn simplify_is_confluent() {
    let mut ds: Vec<_> = all_diagrams().into_iter().map(|(_, d)| d).collect();
    for p in pairs() {
        ds.push(p.before);
        ds.push(p.after);
    }
    for d in ds {
        let base = simplify(&d).diagram;
        for seed in 0..20 {
            let s = simplify_seeded(&d, seed);
            assert_eq!(s.diagram.crossing_count(), base.crossing_count());
            assert_eq!(s.diagram.marker_count(), base.marker_count());
            assert!(s.diagram.sites().len() <= d.sites().len());
        }
    }
}

#[test]
fn trefoil_is_already_reduced() {
    let d = diagram("3_1");
    let s = simplify(&d);
    assert!(s.moves.is_empty());
    assert_eq!(s.diagram, d);
}
