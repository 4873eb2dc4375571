//! Deterministic verifier sweeps over the full zoo of test rings, including
//! a base ring with genuine fusion multiplicities.

use freewreath::{
    fusion_property_report, verify_fullness, verify_stability, BaseRing, IntervalStep, Label,
    OracleBounds, RingTables,
};

/// S₃ built independently by composing permutations, so the Cayley table
/// fed to the ring constructor is produced by a different route than the
/// group-axiom checks inside it.
fn s3_ring() -> BaseRing {
    type Perm = [usize; 3];
    fn compose(a: Perm, b: Perm) -> Perm {
        [a[b[0]], a[b[1]], a[b[2]]]
    }
    let elements: [(&str, Perm); 6] = [
        ("e", [0, 1, 2]),
        ("r", [1, 2, 0]),
        ("r2", [2, 0, 1]),
        ("s", [1, 0, 2]),
        ("sr", [0, 2, 1]),
        ("sr2", [2, 1, 0]),
    ];
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|&(_, a)| {
            elements
                .iter()
                .map(|&(_, b)| {
                    let product = compose(a, b);
                    elements.iter().position(|&(_, p)| p == product).unwrap()
                })
                .collect()
        })
        .collect();
    let names = elements.iter().map(|&(n, _)| n.to_string()).collect();
    BaseRing::dual_group(names, table).unwrap()
}

/// The representation ring of A₄: three one-dimensional labels and the
/// three-dimensional `s` with `s ⊗ s = e ⊕ w ⊕ w2 ⊕ 2s`. The only ring in
/// the suite whose structure constants exceed 1, which is what exercises
/// the multiplicity bookkeeping of the wreath fusion. `s` is declared
/// second so that the two-label slices contain it.
fn rep_a4_ring() -> BaseRing {
    let pairs = |entries: &[(&str, u64)]| -> Vec<(String, u64)> {
        entries.iter().map(|&(l, m)| (l.to_string(), m)).collect()
    };
    let mut fusion = Vec::new();
    let labels = ["e", "s", "w", "w2"];
    for &a in &labels {
        fusion.push((("e".to_string(), a.to_string()), pairs(&[(a, 1)])));
        if a != "e" {
            fusion.push(((a.to_string(), "e".to_string()), pairs(&[(a, 1)])));
        }
    }
    for &(a, b, c) in
        &[("w", "w", "w2"), ("w", "w2", "e"), ("w2", "w", "e"), ("w2", "w2", "w")]
    {
        fusion.push(((a.to_string(), b.to_string()), pairs(&[(c, 1)])));
    }
    for &(a, b) in &[("w", "s"), ("s", "w"), ("w2", "s"), ("s", "w2")] {
        fusion.push(((a.to_string(), b.to_string()), pairs(&[("s", 1)])));
    }
    fusion.push((
        ("s".to_string(), "s".to_string()),
        pairs(&[("e", 1), ("w", 1), ("w2", 1), ("s", 2)]),
    ));

    BaseRing::from_tables(RingTables {
        labels: labels.iter().map(|s| s.to_string()).collect(),
        unit: "e".to_string(),
        dual: vec![
            ("e".to_string(), "e".to_string()),
            ("s".to_string(), "s".to_string()),
            ("w".to_string(), "w2".to_string()),
            ("w2".to_string(), "w".to_string()),
        ],
        dims: vec![
            ("e".to_string(), 1),
            ("s".to_string(), 3),
            ("w".to_string(), 1),
            ("w2".to_string(), 1),
        ],
        fusion,
    })
    .unwrap()
}

fn first_nonunit(ring: &BaseRing) -> Label {
    ring.labels_within(Some(8))
        .unwrap()
        .into_iter()
        .find(|&l| !ring.is_unit(l))
        .unwrap()
}

#[test]
fn s3_table_ring_is_valid() {
    let ring = s3_ring();
    assert_eq!(ring.label_count(), Some(6));
    let report = ring.validate(0);
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
    // all 216 triples were checked
    let assoc = report.items.iter().find(|i| i.id == "ring.associativity").unwrap();
    assert_eq!(assoc.counts, vec![("triples".to_string(), 216)]);
}

#[test]
fn s3_lemmas_pass() {
    let ring = s3_ring();
    let alpha = first_nonunit(&ring);
    assert!(verify_stability(&ring, alpha, 3, Some(2)).unwrap().all_pass());
    assert!(verify_fullness(&ring, alpha, 3, Some(2)).unwrap().all_pass());
}

#[test]
fn s3_fusion_oracles_pass() {
    let ring = s3_ring();
    let bounds = OracleBounds { pair_maxlen: 3, ..OracleBounds::default() };
    let report = fusion_property_report(&ring, &bounds).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn rep_a4_ring_is_valid() {
    let ring = rep_a4_ring();
    let report = ring.validate(0);
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn rep_a4_fusion_oracles_pass_with_real_multiplicities() {
    // the decisive cross-check of the multiplicity convention: with
    // s ⊗ s containing 2s, associativity and dimension consistency
    // only hold if fusion terms carry the base structure constants
    let ring = rep_a4_ring();
    let report = fusion_property_report(&ring, &OracleBounds::default()).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn rep_a4_lemmas_pass() {
    let ring = rep_a4_ring();
    let alpha = ring.label_by_id("s").unwrap();
    assert!(verify_stability(&ring, alpha, 4, Some(2)).unwrap().all_pass());
    assert!(verify_fullness(&ring, alpha, 4, Some(2)).unwrap().all_pass());
}

#[test]
fn interval_step1_lemmas_pass() {
    let ring = BaseRing::interval(IntervalStep::One, 8).unwrap();
    let alpha = first_nonunit(&ring);
    assert!(verify_stability(&ring, alpha, 3, Some(2)).unwrap().all_pass());
    assert!(verify_fullness(&ring, alpha, 3, Some(2)).unwrap().all_pass());
}

#[test]
fn interval_step2_oracles_pass() {
    let ring = BaseRing::interval(IntervalStep::Two, 4).unwrap();
    let bounds = OracleBounds { pair_maxlen: 3, triple_maxlen: 2, ..OracleBounds::default() };
    let report = fusion_property_report(&ring, &bounds).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}
