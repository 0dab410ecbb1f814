//! Descriptor battery shared by the topology and acceptance tests.
#![allow(dead_code)]

use orbitc_core::coadjoint::OrbitParam;
use orbitc_core::topology::SequenceDescriptor;
use orbitc_core::weights::{dominant_weights_in_box, DominantWeight};

pub fn w(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

pub fn seq(s: &str) -> SequenceDescriptor {
    SequenceDescriptor::from_spec(serde_json::from_str(s).unwrap()).unwrap()
}

pub fn ch(v: &[i64]) -> OrbitParam {
    OrbitParam::Character { lambda: w(v) }
}

pub fn inter(v: &[i64], r: f64) -> OrbitParam {
    OrbitParam::Intermediate { mu: w(v), r }
}

pub fn gen(v: &[i64], alpha: f64) -> OrbitParam {
    OrbitParam::Generic { lambda: w(v), alpha }
}

/// (name, descriptor, a target it converges to)
pub fn positives() -> Vec<(&'static str, SequenceDescriptor, OrbitParam)> {
    vec![
        ("alpha converges, lambda fixed", seq(r#"{"n":2,"alpha":{"rule":"harmonic","c":1,"offset":0.5},"lambda":{"head":[1,0]},"K":10000}"#), gen(&[1, 0], 0.5)),
        ("negative alpha, rank 3", seq(r#"{"n":3,"alpha":{"rule":"harmonic","c":-1,"offset":-0.5},"lambda":{"head":[2,0,-1]},"K":10000}"#), gen(&[2, 0, -1], -0.5)),
        ("linked last entry", seq(r#"{"n":2,"alpha":{"rule":"harmonic","c":0.5},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10000}"#), inter(&[0], 1.0)),
        ("linked last entry, rank 3", seq(r#"{"n":3,"alpha":{"rule":"harmonic","c":1},"lambda":{"head":[2,1],"tail":{"rule":"linked","c":-2}},"K":10000}"#), inter(&[2, 1], 2.0)),
        ("linked first entry", seq(r#"{"n":2,"alpha":{"rule":"harmonic","c":-0.5},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5},"position":"first"},"K":10000}"#), inter(&[0], 1.0)),
        ("fixed lambda to character", seq(r#"{"n":2,"alpha":{"rule":"power","c":1,"p":2},"lambda":{"head":[1,0]},"K":10000}"#), ch(&[2, 0])),
        ("unbounded tail to character", seq(r#"{"n":2,"alpha":{"rule":"power","c":1,"p":3},"lambda":{"head":[1],"tail":{"rule":"affine","a":0,"b":-1}},"K":10000}"#), ch(&[2, 0])),
        ("negative alpha to character", seq(r#"{"n":2,"alpha":{"rule":"power","c":-1,"p":2},"lambda":{"head":[1,0]},"K":10000}"#), ch(&[1, -1])),
        ("negative alpha, unbounded first entry", seq(r#"{"n":2,"alpha":{"rule":"power","c":-1,"p":3},"lambda":{"head":[0],"tail":{"rule":"affine","a":0,"b":1},"position":"first"},"K":10000}"#), ch(&[0, -1])),
        ("radius converges", seq(r#"{"family":"intermediate","n":2,"mu":{"head":[0]},"r":{"rule":"harmonic","c":1,"offset":1},"K":10000}"#), inter(&[0], 1.0)),
        ("radius to zero", seq(r#"{"family":"intermediate","n":2,"mu":{"head":[1]},"r":{"rule":"harmonic","c":1},"K":10000}"#), ch(&[2, 0])),
        ("constant character", seq(r#"{"family":"character","n":2,"lambda":{"head":[1,0]},"K":10000}"#), ch(&[1, 0])),
        ("unbounded tail, rank 3", seq(r#"{"n":3,"alpha":{"rule":"power","c":1,"p":3},"lambda":{"head":[1,0],"tail":{"rule":"affine","a":0,"b":-1}},"K":10000}"#), ch(&[2, 1, 0])),
        ("radius to zero, rank 3", seq(r#"{"family":"intermediate","n":3,"mu":{"head":[1,1]},"r":{"rule":"harmonic","c":1},"K":10000}"#), ch(&[2, 1, 0])),
        ("geometric alpha", seq(r#"{"n":2,"alpha":{"rule":"geometric","c":0.5,"q":0.998},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10000}"#), inter(&[0], 1.0)),
    ]
}

pub fn negatives() -> Vec<(&'static str, SequenceDescriptor, OrbitParam)> {
    vec![
        ("wrong alpha", seq(r#"{"n":2,"alpha":{"rule":"harmonic","c":1,"offset":0.5},"lambda":{"head":[1,0]},"K":10000}"#), gen(&[1, 0], 0.3)),
        ("head differs from mu", seq(r#"{"n":2,"alpha":{"rule":"harmonic","c":0.5},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10000}"#), inter(&[1], 1.0)),
        ("interlacing fails", seq(r#"{"n":2,"alpha":{"rule":"power","c":1,"p":2},"lambda":{"head":[1],"tail":{"rule":"affine","a":0,"b":-1}},"K":10000}"#), ch(&[0, 0])),
        ("wrong radius", seq(r#"{"family":"intermediate","n":2,"mu":{"head":[0]},"r":{"rule":"harmonic","c":1,"offset":1},"K":10000}"#), inter(&[0], 2.0)),
        ("mu not below lambda", seq(r#"{"family":"intermediate","n":2,"mu":{"head":[2]},"r":{"rule":"harmonic","c":1},"K":10000}"#), ch(&[1, 0])),
        ("different character", seq(r#"{"family":"character","n":2,"lambda":{"head":[1,0]},"K":10000}"#), ch(&[0, 0])),
    ]
}

/// Candidate targets for agreement runs: every character with entries in
/// [−3, 3], plus intermediate and generic targets around the battery's.
pub fn candidates(n: usize) -> Vec<OrbitParam> {
    let mut out: Vec<OrbitParam> = dominant_weights_in_box(n, -3, 3).into_iter().map(|lambda| OrbitParam::Character { lambda }).collect();
    for mu in dominant_weights_in_box(n - 1, -2, 2) {
        for r in [0.5, 1.0, 2.0] {
            out.push(OrbitParam::Intermediate { mu: mu.clone(), r });
        }
    }
    for lambda in dominant_weights_in_box(n, -1, 2) {
        for alpha in [-0.5, 0.3, 0.5] {
            out.push(OrbitParam::Generic { lambda: lambda.clone(), alpha });
        }
    }
    out
}
