//! The elementary crossing step and its inverse.
//!
//! `cross` swaps a primary part past a secondary part, conserving the total
//! length and the reading-order sequence of primary colors; `uncross` undoes
//! it. Both are total on signed part sizes. The two `*_order_equivalence`
//! checks are the reordering contracts the bijection relies on; they must
//! hold for every input pair and are exposed so a verification pass can
//! sweep them.

use crate::color::delta;
use crate::part::{gt_natural, gt_strong, Part, PrimaryPart, SecondaryPart};

/// `( (k,p), (l,q,r) )  ->  ( (l + d_qr, p, q), (k - d_pq - d_qr, r) )`.
pub fn cross(x: PrimaryPart, y: SecondaryPart) -> (SecondaryPart, PrimaryPart) {
    let d_pq = delta(x.color, y.upper_color);
    let d_qr = y.parity();
    (
        SecondaryPart::new(y.lower_size + d_qr, x.color, y.upper_color),
        PrimaryPart::new(x.size - d_pq - d_qr, y.lower_color),
    )
}

/// `( (k,p,q), (l,r) )  ->  ( (l + d_pq + d_qr, p), (k - d_qr, q, r) )`.
pub fn uncross(x: SecondaryPart, y: PrimaryPart) -> (PrimaryPart, SecondaryPart) {
    let d_pq = x.parity();
    let d_qr = delta(x.lower_color, y.color);
    (
        PrimaryPart::new(y.size + d_pq + d_qr, x.upper_color),
        SecondaryPart::new(x.lower_size - d_qr, x.lower_color, y.color),
    )
}

/// Reordering contract of `cross`: the input pair fails the strong order
/// exactly when the output pair satisfies it. Returns whether the
/// equivalence holds (it always should).
pub fn cross_order_equivalence(x: PrimaryPart, y: SecondaryPart) -> bool {
    let (s, p) = cross(x, y);
    let unordered_before = !gt_strong(x.into(), y.into());
    let ordered_after = gt_strong(s.into(), p.into());
    unordered_before == ordered_after
}

/// Reordering contract of `uncross`: the secondary part's lower half fails
/// the natural order against the primary part exactly when, after
/// uncrossing, the new primary part strongly exceeds the upper half of the
/// new secondary part.
pub fn uncross_order_equivalence(x: SecondaryPart, y: PrimaryPart) -> bool {
    let (p, s) = uncross(x, y);
    let unordered_before = !gt_natural(x.lower_half(), y);
    let ordered_after = gt_strong(p.into(), s.upper_half().into());
    unordered_before == ordered_after
}

fn color_sequence(parts: &[Part]) -> Vec<crate::color::Color> {
    parts.iter().flat_map(|p| p.colors()).collect()
}

/// Exhaustive sweep of the crossing contracts over all pairs with
/// `|k|, |l| <= size_bound` and colors drawn from an `m`-color alphabet:
/// inverses compose to the identity, length and color sequence are
/// conserved, and both order equivalences hold. Returns the number of pairs
/// checked, or the first offending pair rendered as a string.
pub fn sweep_crossing_contracts(m: usize, size_bound: i64) -> Result<u64, String> {
    let alphabet = crate::color::ColorAlphabet::new(m);
    let mut checked = 0u64;
    for p in alphabet.colors() {
        for k in -size_bound..=size_bound {
            let x = PrimaryPart::new(k, p);
            for q in alphabet.colors() {
                for r in alphabet.colors() {
                    for l in -size_bound..=size_bound {
                        let y = SecondaryPart::new(l, q, r);
                        let (s2, p2) = cross(x, y);
                        if uncross(s2, p2) != (x, y) {
                            return Err(format!("uncross(cross({x}, {y}))"));
                        }
                        if s2.length() + p2.size != x.size + y.length() {
                            return Err(format!("length conservation at ({x}, {y})"));
                        }
                        let before = color_sequence(&[x.into(), y.into()]);
                        let after = color_sequence(&[s2.into(), p2.into()]);
                        if before != after {
                            return Err(format!("color sequence at ({x}, {y})"));
                        }
                        if !cross_order_equivalence(x, y) {
                            return Err(format!("cross ordering at ({x}, {y})"));
                        }
                        // the mirrored direction
                        let (p3, s3) = uncross(y, x);
                        if cross(p3, s3) != (y, x) {
                            return Err(format!("cross(uncross({y}, {x}))"));
                        }
                        if !uncross_order_equivalence(y, x) {
                            return Err(format!("uncross ordering at ({y}, {x})"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    const A: Color = Color(0);
    const B: Color = Color(1);

    #[test]
    fn cross_row_a_col_ba() {
        // (k,a) with (l,b,a) gives ((l,a,b), (k-1,a))
        for k in -5..=10 {
            for l in -5..=10 {
                let (s, p) = cross(PrimaryPart::new(k, A), SecondaryPart::new(l, B, A));
                assert_eq!(s, SecondaryPart::new(l, A, B));
                assert_eq!(p, PrimaryPart::new(k - 1, A));
            }
        }
    }

    #[test]
    fn cross_length_table_entry() {
        // 10:a + 9:bb -> 11:ab + 8:b
        let (s, p) = cross(PrimaryPart::new(10, A), SecondaryPart::new(4, B, B));
        assert_eq!(s, SecondaryPart::new(5, A, B));
        assert_eq!(s.length(), 11);
        assert_eq!(p, PrimaryPart::new(8, B));
        assert_eq!(10 + 9, 11 + 8);
    }

    #[test]
    fn uncross_inverts_the_table_entry() {
        let (p, s) = uncross(SecondaryPart::new(5, A, B), PrimaryPart::new(8, B));
        assert_eq!(p, PrimaryPart::new(10, A));
        assert_eq!(s, SecondaryPart::new(4, B, B));
    }

    #[test]
    fn order_equivalence_spot_cases() {
        // 10:a does not strongly exceed 9:bb, so the crossed pair is ordered
        let x = PrimaryPart::new(10, A);
        let y = SecondaryPart::new(4, B, B);
        assert!(!gt_strong(x.into(), y.into()));
        let (s, p) = cross(x, y);
        assert!(gt_strong(s.into(), p.into()));
        assert!(cross_order_equivalence(x, y));

        // 9:a against 9:bb crosses to 11:ab + 7:b which is ordered
        let x = PrimaryPart::new(9, A);
        assert!(!gt_strong(x.into(), y.into()));
        let (s, p) = cross(x, y);
        assert_eq!((s.length(), p.size), (11, 7));
        assert!(gt_strong(s.into(), p.into()));
        assert!(cross_order_equivalence(x, y));
    }

    #[test]
    fn uncross_equivalence_walkthrough_pair() {
        // 11:aa followed by 7:b: the lower half 5:a fails against 7:b,
        // and uncrossing yields 9:a + 9:ab with 9:a strongly above the
        // upper half 5:a.
        let x = SecondaryPart::new(5, A, A);
        let y = PrimaryPart::new(7, B);
        assert!(!gt_natural(x.lower_half(), y));
        let (p, s) = uncross(x, y);
        assert_eq!(p, PrimaryPart::new(9, A));
        assert_eq!(s, SecondaryPart::new(4, A, B));
        assert!(gt_strong(p.into(), s.upper_half().into()));
        assert!(uncross_order_equivalence(x, y));
    }

    #[test]
    fn uncross_equivalence_already_ordered_pair() {
        // both sides false when the halves are already well separated
        let x = SecondaryPart::new(10, A, A);
        let y = PrimaryPart::new(1, A);
        assert!(gt_natural(x.lower_half(), y));
        let (p, s) = uncross(x, y);
        assert!(!gt_strong(p.into(), s.upper_half().into()));
        assert!(uncross_order_equivalence(x, y));
    }

    #[test]
    fn exhaustive_sweep_small_range() {
        for m in 1..=3 {
            assert!(sweep_crossing_contracts(m, 8).is_ok());
        }
    }

    /// Crossing agrees with the three-slot vectorial description: colors
    /// stay attached to slots while sizes shift by the local color steps.
    #[test]
    fn cross_matches_vectorial_moves() {
        let alphabet = crate::color::ColorAlphabet::new(3);
        for p in alphabet.colors() {
            for q in alphabet.colors() {
                for r in alphabet.colors() {
                    for k in -4..=8 {
                        for l in -4..=8 {
                            let x = PrimaryPart::new(k, p);
                            let y = SecondaryPart::new(l, q, r);
                            // slots: [x, upper(y), lower(y)]
                            let sizes = [x.size, y.upper_half().size, y.lower_half().size];
                            let step12 = delta(p, q);
                            let step23 = delta(q, r);
                            let expected = [
                                sizes[1] + step12,
                                sizes[2] + step23,
                                sizes[0] - step12 - step23,
                            ];
                            let (s2, p2) = cross(x, y);
                            let got = [s2.upper_half().size, s2.lower_half().size, p2.size];
                            assert_eq!(got, expected);
                            assert_eq!([s2.upper_color, s2.lower_color, p2.color], [p, q, r]);
                        }
                    }
                }
            }
        }
    }
}
