use super::*;
use crate::algebra::{int, LaurentPoly};
use crate::grammar::Grammar;

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn exterior_peaks_of_534621() {
    let s = stats(&perm("534621"));
    assert_eq!((s.ep1, s.ep2), (1, 1));
}

#[test]
fn proper_double_descents_of_653421() {
    assert_eq!(stats(&perm("653421")).pdd, 2);
}

#[test]
fn peaks_valleys_runs_of_4356721() {
    let s = stats(&perm("4356721"));
    assert_eq!(s.peaks(), 2);
    assert_eq!(s.valleys, 1);
    assert_eq!(s.dr, 2);
    assert_eq!(s.dd, 2);
}

#[test]
fn singleton_peak_is_pattern_132() {
    let s = stats(&perm("1"));
    assert_eq!((s.p1, s.p2), (1, 0));
}

#[test]
fn exterior_label_example() {
    let l = label(&perm("534621"), Scheme::Exterior).unwrap();
    assert_eq!(l.render(), "x v w u z y z");
    let g = Grammar::g();
    assert_eq!(l.weight, g.parse_poly("x*y*z^2*w*u*v").unwrap());
}

#[test]
fn empty_exterior_label() {
    let l = label(&Permutation::empty(), Scheme::Exterior).unwrap();
    assert_eq!(l.render(), "z");
}

#[test]
fn peak_label_21() {
    let l = label(&perm("21"), Scheme::Peak).unwrap();
    assert_eq!(l.render(), "x v y");
    assert!(label(&Permutation::empty(), Scheme::Peak).is_err());
}

#[test]
fn labels_match_weight_formulas() {
    for n in 0..=7 {
        for_each_permutation(n, |p| {
            for scheme in [Scheme::Exterior, Scheme::Peak] {
                if n == 0 && scheme == Scheme::Peak {
                    continue;
                }
                let l = label(p, scheme).unwrap();
                assert_eq!(l.labels.len(), n + 1);
                let e = labeling::weight_exponents(p, scheme);
                let expect = LaurentPoly::term(
                    &g_vars(),
                    crate::algebra::Monomial::from_int_exponents(&e),
                    int(1),
                );
                assert_eq!(l.weight, expect, "{p} {scheme:?}");
            }
        });
    }
}

#[test]
fn parsing_and_display() {
    assert_eq!(perm("534621").to_string(), "534621");
    assert_eq!(perm("3 1 2"), perm("312"));
    assert!("1421".parse::<Permutation>().is_err());
    assert!("0".parse::<Permutation>().is_err());
    assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
    let ten = Permutation::identity(10);
    assert_eq!(ten.to_string().parse::<Permutation>().unwrap(), ten);
}

#[test]
fn lexicographic_order() {
    let mut seen = Vec::new();
    for_each_permutation(3, |p| seen.push(p.to_string()));
    assert_eq!(seen, ["123", "132", "213", "231", "312", "321"]);
    assert_eq!(perm("321").next_lex(), None);
    let mut count = 0;
    for_each_permutation(0, |p| {
        assert!(p.is_empty());
        count += 1
    });
    assert_eq!(count, 1);
}

#[test]
fn parallel_fold_counts_everything() {
    let n = fold_permutations(6, || 0usize, |a, _| *a += 1, |a, b| a + b);
    assert_eq!(n, 720);
}

#[test]
fn insertion_children_examples() {
    let kids: Vec<String> = perm("21")
        .insertion_children()
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(kids, ["321", "231", "213"]);
    assert_eq!(Permutation::empty().insertion_children(), vec![perm("1")]);
}

#[test]
fn consecutive_counts() {
    assert_eq!(perm("123456").consecutive_count(&perm("12")).unwrap(), 5);
    assert_eq!(perm("321").consecutive_count(&perm("321")).unwrap(), 1);
    assert_eq!(perm("12").consecutive_count(&perm("321")).unwrap(), 0);
    assert!(perm("12").consecutive_count(&Permutation::empty()).is_err());
}

#[test]
fn small_specializations() {
    let cfg = EnumConfig::default();
    let t2 = specialized_poly(2, Family::T, &cfg).unwrap();
    assert_eq!(t2.to_string(), "1 + x");
    let l3 = specialized_poly(3, Family::L, &cfg).unwrap();
    assert_eq!(l3.to_string(), "4 + 2*x");
    assert_eq!(
        specialized_poly(0, Family::TA, &cfg).unwrap().to_string(),
        "1"
    );
    assert!(specialized_poly(0, Family::F, &cfg).is_err());
}

#[test]
fn enumerate_small() {
    let cfg = EnumConfig::default();
    assert_eq!(enumerate_poly(0, Target::P, &cfg).unwrap().to_string(), "z");
    assert!(enumerate_poly(0, Target::Q, &cfg).is_err());
    assert!(matches!(
        enumerate_poly(10, Target::P, &cfg),
        Err(crate::Error::CapExceeded { n: 10, cap: 9 })
    ));
    assert!(EnumConfig::large(12).is_err());
}

#[test]
fn p4_matches_d4z() {
    let g = Grammar::g();
    let p4 = enumerate_poly(4, Target::P, &EnumConfig::default()).unwrap();
    assert_eq!(p4, g.derive_n(&g.var("z").unwrap(), 4).unwrap());
}

#[test]
fn coefficient_xyzwv_permutations() {
    // brute force decides which five permutations carry xyzwv
    let mut found = Vec::new();
    for_each_permutation(4, |p| {
        let e = labeling::weight_exponents(p, Scheme::Exterior);
        if e == [1, 1, 1, 1, 0, 1] {
            found.push(p.to_string());
        }
    });
    assert_eq!(found, ["1432", "2431", "3214", "4213", "4312"]);
}

#[test]
fn involutions_and_triangles() {
    let cfg = EnumConfig::default();
    let inv: Vec<u64> = (0..=8)
        .map(|n| involution_count(n, &cfg).unwrap())
        .collect();
    assert_eq!(inv, [1, 1, 2, 4, 10, 26, 76, 232, 764]);
    let eul = triangle(Family::Eulerian, 4, &cfg).unwrap();
    assert_eq!(
        eul,
        vec![
            vec![1],
            vec![1],
            vec![1, 1],
            vec![1, 4, 1],
            vec![1, 11, 11, 1]
        ]
    );
    let l = triangle(Family::L, 5, &cfg).unwrap();
    let col0: Vec<u64> = l.iter().map(|r| r[0]).collect();
    assert_eq!(col0, [1, 1, 2, 4, 10, 26]);
    assert!(triangle(Family::T, 3, &cfg).is_err());
}

#[test]
fn csv_roundtrip() {
    let rows = triangle(Family::GesselT, 5, &EnumConfig::default()).unwrap();
    let mut buf = Vec::new();
    write_triangle_csv(&rows, 0, &mut buf).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert!(text.starts_with("n,0,1,2\n0,1,,\n"));
    let back = read_triangle_csv(&buf[..]).unwrap();
    assert_eq!(back.len(), rows.len());
    for ((n, r), (i, orig)) in back.iter().zip(rows.iter().enumerate()) {
        assert_eq!(*n, i);
        let r: Vec<u64> = r.iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(&r, orig);
    }
}
