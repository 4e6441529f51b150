use super::*;
use std::collections::BTreeSet;

fn site(dim: usize, side: usize, p: f64, trials: u64, seed: u64) -> PercConfig {
    PercConfig::new(dim, side, Flavor::Site, p, trials, seed)
}

/// Components by repeated relabelling over an explicit neighbour list.
fn brute_partition(side: usize, flavor: Flavor, open: &[bool]) -> BTreeSet<BTreeSet<usize>> {
    let len = side * side;
    let present = |v: usize| flavor == Flavor::Bond || open[v];
    let mut links = Vec::new();
    for x in 0..side {
        for y in 0..side {
            let v = x * side + y;
            if x + 1 < side {
                let w = v + side;
                let ok = match flavor {
                    Flavor::Site => open[v] && open[w],
                    Flavor::Bond => open[v * 2],
                };
                if ok {
                    links.push((v, w));
                }
            }
            if y + 1 < side {
                let w = v + 1;
                let ok = match flavor {
                    Flavor::Site => open[v] && open[w],
                    Flavor::Bond => open[v * 2 + 1],
                };
                if ok {
                    links.push((v, w));
                }
            }
        }
    }
    let mut label: Vec<usize> = (0..len).collect();
    loop {
        let mut changed = false;
        for &(a, b) in &links {
            let m = label[a].min(label[b]);
            if label[a] != m || label[b] != m {
                label[a] = m;
                label[b] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for v in (0..len).filter(|&v| present(v)) {
        groups.entry(label[v]).or_default().insert(v);
    }
    groups.into_values().collect()
}

fn uf_partition(cfg: &PercConfig, open: &[bool]) -> BTreeSet<BTreeSet<usize>> {
    let labels = cluster_labels(cfg, open).unwrap();
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for (v, l) in labels.iter().enumerate() {
        if let Some(l) = l {
            groups.entry(*l).or_default().insert(v);
        }
    }
    groups.into_values().collect()
}

#[test]
fn hand_built_3x3_site_configurations() {
    let cfg = site(2, 3, 0.5, 1, 0);
    let configs: [[u8; 9]; 5] = [
        [1, 1, 1, 0, 0, 0, 1, 1, 1],
        [1, 0, 1, 0, 1, 0, 1, 0, 1],
        [1, 1, 0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
    ];
    let expected_clusters = [2, 5, 1, 0, 1];
    for (c, want) in configs.iter().zip(expected_clusters) {
        let open: Vec<bool> = c.iter().map(|&x| x == 1).collect();
        let got = uf_partition(&cfg, &open);
        assert_eq!(got, brute_partition(3, Flavor::Site, &open));
        assert_eq!(got.len(), want);
    }
}

#[test]
fn hand_built_3x3_bond_configurations() {
    let cfg = PercConfig::new(2, 3, Flavor::Bond, 0.5, 1, 0);
    for mask in [0u32, 0x3ffff, 0b101010101010101010, 0b000000000000000011, 0b110000110000110000] {
        let open: Vec<bool> = (0..18).map(|i| mask >> i & 1 == 1).collect();
        assert_eq!(uf_partition(&cfg, &open), brute_partition(3, Flavor::Bond, &open));
    }
    // no open edges: nine singletons
    assert_eq!(uf_partition(&cfg, &[false; 18]).len(), 9);
}

#[test]
fn random_configurations_match_brute_force() {
    for flavor in [Flavor::Site, Flavor::Bond] {
        for trial in 0..50 {
            let cfg = PercConfig::new(2, 5, flavor, 0.55, 1, 99);
            let open = sample_cells(&cfg, trial).unwrap();
            assert_eq!(uf_partition(&cfg, &open), brute_partition(5, flavor, &open));
        }
    }
}

#[test]
fn extreme_p() {
    for flavor in [Flavor::Site, Flavor::Bond] {
        let zero = crossing_probability(&PercConfig::new(2, 16, flavor, 0.0, 50, 1)).unwrap();
        assert_eq!((zero.value, zero.half_width), (0.0, 0.0));
        let one = crossing_probability(&PercConfig::new(3, 8, flavor, 1.0, 50, 1)).unwrap();
        assert_eq!((one.value, one.half_width), (1.0, 0.0));
    }
}

#[test]
fn coupled_monotone_in_p() {
    for flavor in [Flavor::Site, Flavor::Bond] {
        let mut prev = 0.0;
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let est = crossing_probability(&PercConfig::new(2, 24, flavor, p, 200, 5)).unwrap();
            assert!(est.value >= prev, "{flavor:?} p={p}");
            prev = est.value;
        }
    }
}

#[test]
fn thread_count_does_not_matter() {
    let mut a = site(2, 32, 0.6, 300, 17);
    a.threads = 1;
    let mut b = a.clone();
    b.threads = 4;
    assert_eq!(crossing_probability(&a).unwrap(), {
        let mut e = crossing_probability(&b).unwrap();
        e.config.threads = 1;
        e
    });
    let ta = cluster_tail_curve(&a, 20).unwrap();
    let tb = cluster_tail_curve(&b, 20).unwrap();
    let values = |c: &[PercEstimate]| c.iter().map(|e| e.value.to_bits()).collect::<Vec<_>>();
    assert_eq!(values(&ta), values(&tb));
}

#[test]
fn near_threshold_crossing_is_balanced() {
    let est = crossing_probability(&site(2, 64, 0.593, 2000, 2024)).unwrap();
    assert!((0.35..=0.65).contains(&est.value), "{}", est.value);
    assert!(est.half_width > 0.0 && est.half_width < 0.03);
}

#[test]
fn box_cap() {
    let cfg = site(3, 1000, 0.5, 1, 0);
    assert!(matches!(cfg.validate(), Err(Error::BoxTooLarge { .. })));
    assert!(site(2, 1, 0.5, 1, 0).validate().is_err());
    assert!(site(2, 4, 1.5, 1, 0).validate().is_err());
    assert!(site(2, 4, 0.5, 0, 0).validate().is_err());
}

#[test]
fn tail_extremes() {
    let closed = cluster_tail_curve(&site(2, 16, 0.0, 20, 3), 5).unwrap();
    assert!(closed.iter().all(|e| e.value == 0.0));
    let bond_closed = cluster_tail_curve(&PercConfig::new(2, 16, Flavor::Bond, 0.0, 20, 3), 3).unwrap();
    assert_eq!(bond_closed[0].value, 1.0);
    assert!(bond_closed[1..].iter().all(|e| e.value == 0.0));
    let open = cluster_tail(&site(2, 8, 1.0, 10, 3), 64).unwrap();
    assert_eq!(open.value, 1.0);
    assert_eq!(cluster_tail(&site(2, 8, 1.0, 10, 3), 65).unwrap().value, 0.0);
}

#[test]
fn tail_nonincreasing_and_subcritical_decay() {
    let curve = cluster_tail_curve(&site(2, 64, 0.3, 20_000, 11), 25).unwrap();
    for w in curve.windows(2) {
        assert!(w[1].value <= w[0].value);
    }
    // least squares of ln P(|C| >= n) against n over n = 5..25
    let pts: Vec<(f64, f64)> = curve[4..]
        .iter()
        .filter(|e| e.value > 0.0)
        .map(|e| (e.n.unwrap() as f64, e.value.ln()))
        .collect();
    assert!(pts.len() >= 10);
    let k = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / k, sy / k);
    let num: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let slope = num / den;
    assert!(slope < -0.05, "slope {slope}");
}

#[test]
fn threshold_d2_site_near_frozen_reference() {
    // reference from a 20000-trial run of the same estimator at L = 128
    const REFERENCE: f64 = 0.59265;
    let est = estimate_threshold(&site(2, 128, 0.5, 400, 7)).unwrap();
    assert!((est.value - REFERENCE).abs() < 0.02, "{} vs {REFERENCE}", est.value);
    assert!(est.half_width > 0.0 && est.half_width < 0.05);
}

#[test]
fn threshold_d3_site_above_rigorous_bound() {
    let est = estimate_threshold(&site(3, 16, 0.5, 200, 8)).unwrap();
    assert!(est.value > 0.2522, "{}", est.value);
}

#[test]
fn threshold_deterministic() {
    let cfg = site(2, 32, 0.5, 100, 9);
    assert_eq!(estimate_threshold(&cfg).unwrap(), estimate_threshold(&cfg).unwrap());
}
