use super::*;
use crate::words::enumerate_dyck;

fn w(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

fn count(s: &str, p: &str, t: &str) -> BigInt {
    t_count(&w(s), &w(p), &w(t)).unwrap()
}

#[test]
fn smallest_triangle() {
    assert_eq!(count("01", "01", "01"), BigInt::from(1));
    assert_eq!(
        enumerate_oriented(&w("01"), &w("01"), &w("01"))
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn size_two_anchors() {
    assert_eq!(count("0011", "0101", "0011"), BigInt::from(2));
    assert_eq!(count("0011", "0101", "0101"), BigInt::from(1));
    assert_eq!(count("0101", "0101", "0011"), BigInt::from(1));
    assert_eq!(count("0101", "0101", "0101"), BigInt::from(0));
    assert_eq!(count("0011", "0011", "0011"), BigInt::from(1));
    for tau in ["0011", "0101"] {
        assert_eq!(count("0101", "0011", tau), BigInt::from(0));
    }
}

#[test]
fn length_errors() {
    assert!(matches!(
        t_count(&w("01"), &w("0101"), &w("01")),
        Err(TfplError::LengthMismatch(..))
    ));
    assert!(matches!(
        t_count(&w("0111"), &w("0101"), &w("0011")),
        Err(TfplError::Unbalanced(_))
    ));
}

#[test]
fn enumerated_configurations_are_consistent() {
    for n in 1..=3 {
        let dyck = enumerate_dyck(n);
        for s in &dyck {
            for p in &dyck {
                for t in &dyck {
                    let plain = enumerate_tfpl(s, p, t).unwrap();
                    assert_eq!(
                        BigInt::from(plain.len()),
                        count(&s.to_string(), &p.to_string(), &t.to_string())
                    );
                    let oriented = enumerate_oriented(s, p, t).unwrap();
                    let well = oriented.iter().filter(|g| g.is_well_oriented()).count();
                    assert_eq!(well, plain.len(), "{s} {p} {t}");
                    for g in &oriented {
                        // N_i - N_{i-1} = pi_i - sigma_i on every oriented configuration.
                        let stats = g.n_stats();
                        let mut prev = 0i64;
                        for (i, &stat) in stats.iter().enumerate() {
                            let delta = p.get(i) as i64 - s.get(i) as i64;
                            assert_eq!(stat - prev, delta, "{s} {p} {t}");
                            prev = stat;
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sweep_beyond_size_four() {
    // Frontier states no longer fit a 128-bit key from n = 5 on.
    let n = 5;
    let words = enumerate_dyck(n);
    let mut checked = 0;
    for (i, (s, p)) in words
        .iter()
        .flat_map(|s| words.iter().map(move |p| (s, p)))
        .filter(|(s, p)| reverse_shape(s, p).is_some())
        .enumerate()
    {
        if i % 7 != 0 {
            continue;
        }
        for t in &words {
            if let Ok((d0, _)) = lgv_determinants(s, p, t) {
                assert_eq!(t_count(s, p, t).unwrap(), d0, "{s} {t} {p}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "{checked}");
    let zero = BinaryWord::zeros_then_ones(n, n);
    assert_eq!(t_count(&zero, &zero, &zero).unwrap(), BigInt::from(1));
    assert_eq!(
        count("0000011111", "0101010101", "0000011111"),
        BigInt::from(61587)
    );
}
