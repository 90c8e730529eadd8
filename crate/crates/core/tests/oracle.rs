use motivic_core::oracle::{
    build_group, commutator_distribution, convolve_class_functions, puncture_indicator, ClassFunction, GroupTable,
    Oracle,
};
use motivic_core::{PunctureKind, SurfaceSpec};

/// Tuple enumeration, independent of the convolution path.
fn naive_count(t: &GroupTable, spec: &SurfaceSpec) -> i128 {
    let members = |kind: PunctureKind| -> Vec<usize> {
        let p = t.p();
        (0..t.len())
            .filter(|&i| match kind {
                PunctureKind::JPlus => (t.element(i)[0] + t.element(i)[3]) % p == 2 % p && i != t.id_index(),
                PunctureKind::JMinus => (t.element(i)[0] + t.element(i)[3]) % p == p - 2 && i != t.neg_id_index(),
                PunctureKind::MinusId => i == t.neg_id_index(),
            })
            .collect()
    };
    let n = t.len();
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for _ in 0..2 * spec.genus {
        slots.push((0..n).collect());
    }
    for kind in spec.punctures() {
        slots.push(members(kind));
    }
    let mut count = 0;
    let mut idx = vec![0usize; slots.len()];
    loop {
        let mut x = t.id_index();
        for i in 0..spec.genus as usize {
            x = t.mul(x, t.commutator(slots[2 * i][idx[2 * i]], slots[2 * i + 1][idx[2 * i + 1]]));
        }
        for j in 2 * spec.genus as usize..slots.len() {
            x = t.mul(x, slots[j][idx[j]]);
        }
        if x == t.id_index() {
            count += 1;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == slots.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < slots[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn group_orders() {
    for p in [3, 5, 7, 11] {
        assert_eq!(build_group(p).unwrap().len() as u32, p * (p * p - 1));
    }
    assert!(build_group(2).is_err());
    assert!(build_group(21).is_err());
}

#[test]
fn convolution_matches_enumeration() {
    for p in [3, 5] {
        let oracle = Oracle::new(p).unwrap();
        for spec in SurfaceSpec::grid(1, 1).into_iter().filter(|s| s.genus == 1) {
            assert_eq!(oracle.count(&spec).unwrap(), naive_count(oracle.table(), &spec), "p={p} {spec}");
        }
    }
}

#[test]
fn genus_two_by_four_tuples() {
    let oracle = Oracle::new(3).unwrap();
    let t = oracle.table();
    let n1 = commutator_distribution(t);
    let nn = convolve_class_functions(&n1, &n1, t).unwrap();
    let naive = naive_count(t, &SurfaceSpec::closed(2));
    assert_eq!(nn.value(t.id_index()), naive);
    assert_eq!(oracle.count(&SurfaceSpec::closed(2)).unwrap(), naive);
}

#[test]
fn genus_zero_by_enumeration() {
    let oracle = Oracle::new(5).unwrap();
    for spec in SurfaceSpec::grid(0, 3) {
        assert_eq!(oracle.count(&spec).unwrap(), naive_count(oracle.table(), &spec), "{spec}");
    }
}

#[test]
fn convolution_is_associative_and_preserves_centrality() {
    let t = build_group(5).unwrap();
    let n = t.len();
    // non-central functions
    let f = |seed: usize| {
        let v = (0..n).map(|i| ((i * 31 + seed * 17) % 7) as i128 - 3).collect();
        ClassFunction::general(v, &t).unwrap()
    };
    for s in 0..3 {
        let (a, b, c) = (f(s), f(s + 5), f(s + 11));
        let left = convolve_class_functions(&convolve_class_functions(&a, &b, &t).unwrap(), &c, &t).unwrap();
        let right = convolve_class_functions(&a, &convolve_class_functions(&b, &c, &t).unwrap(), &t).unwrap();
        assert_eq!(left, right);
    }
    let central = [
        commutator_distribution(&t),
        puncture_indicator(PunctureKind::JPlus, &t),
        puncture_indicator(PunctureKind::JMinus, &t),
    ];
    for a in &central {
        for b in &central {
            let c = convolve_class_functions(a, b, &t).unwrap();
            assert!(ClassFunction::new(c.values().to_vec(), &t).is_ok());
        }
    }
}

#[test]
fn indicators_have_q_squared_minus_one_points() {
    for p in [3u32, 5, 7] {
        let t = build_group(p).unwrap();
        for kind in [PunctureKind::JPlus, PunctureKind::JMinus] {
            assert_eq!(puncture_indicator(kind, &t).support_size() as u32, p * p - 1);
        }
    }
}

#[test]
fn cross_check_passes_when_minus_one_is_a_square() {
    for p in [5, 13] {
        let oracle = Oracle::new(p).unwrap();
        for spec in SurfaceSpec::grid(2, 2) {
            let c = oracle.cross_check(&spec).unwrap();
            assert!(c.pass, "p={p} {spec}: {} vs {}", c.count, c.polynomial);
        }
    }
}

#[test]
fn cross_check_passes_on_even_sign_everywhere() {
    for p in [3, 7, 11] {
        let oracle = Oracle::new(p).unwrap();
        for spec in SurfaceSpec::grid(2, 2).into_iter().filter(|s| s.sigma() == 1 || s.genus == 0) {
            let c = oracle.cross_check(&spec).unwrap();
            assert!(c.pass, "p={p} {spec}: {} vs {}", c.count, c.polynomial);
        }
    }
}
