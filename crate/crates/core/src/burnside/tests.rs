use super::*;
use crate::catalog::catalog;
use crate::coloring::col;
use crate::error::Error;

fn free(m: usize) -> GroupPresentation {
    GroupPresentation { generators: (0..m).map(|i| format!("x{i}")).collect(), relators: vec![] }
}

#[test]
fn free_calibration() {
    for m in 1..=4 {
        assert_eq!(lie_quotient(&free(m), 3, 3).unwrap().dims, reference_dims(m, 3), "p=3 m={m}");
        assert_eq!(lie_quotient(&free(m), 5, 3).unwrap().dims, reference_dims(m, 5), "p=5 m={m}");
    }
    assert_eq!(lie_quotient(&free(2), 5, 3).unwrap().dims, vec![2, 1, 2]);
    assert_eq!(lie_quotient(&free(4), 3, 3).unwrap().dims, vec![4, 6, 4]);
}

#[test]
fn hall_labels_span() {
    let q = lie_quotient(&free(2), 5, 3).unwrap();
    assert_eq!(q.basis[1], vec!["[x1,x0]"]);
    assert_eq!(q.basis[2], vec!["[[x1,x0],x0]", "[[x1,x0],x1]"]);
}

#[test]
fn trefoil_is_cyclic() {
    let r = burnside_report(&catalog("3_1").unwrap(), 3).unwrap();
    assert_eq!(r.dims, vec![1, 0, 0]);
    assert_eq!(r.order_exponent, Some(1));
    assert!(!r.obstruction);
}

#[test]
fn trivial_links() {
    for (n, e) in [(5, 14), (6, 25)] {
        let r = burnside_report(&catalog(&format!("T_{n}")).unwrap(), 3).unwrap();
        assert_eq!(r.order_exponent, Some(e));
        assert!(!r.obstruction);
    }
    assert_eq!(burnside_report(&Diagram::trivial(3), 5).unwrap().dims, vec![2, 1, 2]);
}

#[test]
fn unsupported() {
    let g = free(2);
    assert!(matches!(lie_quotient(&g, 2, 3), Err(Error::Unsupported(_))));
    assert!(matches!(lie_quotient(&g, 3, 4), Err(Error::Unsupported(_))));
    assert!(matches!(lie_quotient(&g, 9, 3), Err(Error::InvalidParameter(_))));
}

#[test]
fn lower_class_truncates() {
    let q = lie_quotient(&free(3), 7, 2).unwrap();
    assert_eq!(q.dims, vec![3, 3]);
}

#[test]
fn first_layer_counts_colorings() {
    for name in ["3_1", "4_1", "whitehead", "borromean", "9_40"] {
        let d = catalog(name).unwrap();
        for p in [3u64, 5, 7] {
            let c = col(&d, p);
            let log = (0..).find(|&k| num_bigint::BigUint::from(p).pow(k) == c).unwrap() as usize;
            assert_eq!(burnside_report(&d, p).unwrap().dims[0], log - 1, "{name} p={p}");
        }
    }
}

#[test]
fn kill_independence() {
    let d = catalog("borromean").unwrap();
    let g = core_group(&d);
    let base = burnside_report(&d, 3).unwrap();
    for k in 1..g.generators.len() {
        assert_eq!(burnside_report_killing(&d, 3, k).unwrap().dims, base.dims, "kill {k}");
    }
}

#[test]
fn nine_49_obstructed_at_five() {
    let r = burnside_report(&catalog("9_49").unwrap(), 5).unwrap();
    assert_eq!(r.dims[0], 2);
    assert_ne!(r.dims[2], 2);
    assert!(r.obstruction);
}
