//! Lexicographic comparison of two `n`-bit strings.
//!
//! Strings are read left to right with the leftmost bit most significant, so
//! `a_{n-1}` is the first character. Inputs are `a{n-1} .. a0` then
//! `b{n-1} .. b0`, i.e. both strings in reading order.

use super::{Circuit, CircuitBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Lex,
    /// Lex with the two input blocks exchanged.
    Rlex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    Nonstrict,
}

/// Emit the comparison of `a` against `b` (both most significant first) and
/// return its wire.
pub fn lex_into(
    b: &mut CircuitBuilder,
    a_bits: &[usize],
    b_bits: &[usize],
    variant: Variant,
    strictness: Strictness,
) -> usize {
    assert_eq!(a_bits.len(), b_bits.len());
    let (x, y) = match variant {
        Variant::Lex => (a_bits, b_bits),
        Variant::Rlex => (b_bits, a_bits),
    };
    let n = x.len();
    // Position k in reading order has significance n-1-k.
    let eq: Vec<usize> = (0..n).map(|k| b.equal(x[k], y[k])).collect();
    // Strict: some position where y is 1 and x is 0, with equal higher bits.
    // Nonstrict: no position where x is 1 and y is 0 with equal higher bits.
    let (hi, lo) = match strictness {
        Strictness::Strict => (y, x),
        Strictness::Nonstrict => (x, y),
    };
    let mut terms = Vec::with_capacity(n);
    for k in 0..n {
        let nlo = b.not(lo[k]);
        let gt = b.and(hi[k], nlo);
        let prefix = b.and_all(&eq[..k]);
        terms.push(b.and(gt, prefix));
    }
    let any = b.or_all(&terms);
    match strictness {
        Strictness::Strict => any,
        Strictness::Nonstrict => b.not(any),
    }
}

pub fn build_lex_circuit(n: usize, variant: Variant, strictness: Strictness) -> Circuit {
    assert!(n >= 1, "width must be positive");
    let mut b = CircuitBuilder::new();
    let a_bits: Vec<usize> = (0..n).rev().map(|i| b.input(format!("a{i}")).expect("fresh")).collect();
    let b_bits: Vec<usize> = (0..n).rev().map(|i| b.input(format!("b{i}")).expect("fresh")).collect();
    let out = lex_into(&mut b, &a_bits, &b_bits, variant, strictness);
    let name = match strictness {
        Strictness::Strict => "lt",
        Strictness::Nonstrict => "le",
    };
    b.rename(out, name).expect("fresh name");
    b.finish(vec![out])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: u32, n: usize) -> Vec<bool> {
        (0..n).rev().map(|i| v >> i & 1 == 1).collect()
    }

    fn run(c: &Circuit, a: &[bool], b: &[bool]) -> bool {
        let input: Vec<bool> = a.iter().chain(b).copied().collect();
        c.eval(&input).unwrap()[0]
    }

    #[test]
    fn width_one() {
        let c = build_lex_circuit(1, Variant::Lex, Strictness::Strict);
        assert!(run(&c, &[false], &[true]));
        assert!(!run(&c, &[true], &[false]));
        assert!(!run(&c, &[true], &[true]));
        assert_eq!(c.inputs(), ["a0", "b0"]);
    }

    #[test]
    fn strict_lex_matches_string_order() {
        for n in 1..=4 {
            let c = build_lex_circuit(n, Variant::Lex, Strictness::Strict);
            let r = build_lex_circuit(n, Variant::Rlex, Strictness::Strict);
            let le = build_lex_circuit(n, Variant::Lex, Strictness::Nonstrict);
            for x in 0..1u32 << n {
                for y in 0..1u32 << n {
                    let (sx, sy): (String, String) = (
                        bits(x, n).iter().map(|&v| if v { '1' } else { '0' }).collect(),
                        bits(y, n).iter().map(|&v| if v { '1' } else { '0' }).collect(),
                    );
                    let (a, b) = (bits(x, n), bits(y, n));
                    assert_eq!(run(&c, &a, &b), sx < sy);
                    assert_eq!(run(&r, &a, &b), sy < sx);
                    assert_eq!(run(&le, &a, &b), run(&c, &a, &b) || a == b);
                }
            }
        }
    }

    #[test]
    fn example_pair() {
        let c = build_lex_circuit(2, Variant::Lex, Strictness::Strict);
        assert!(!run(&c, &[true, false], &[false, true]));
    }

    #[test]
    fn size_is_quadratic() {
        for n in 1..=16 {
            let c = build_lex_circuit(n, Variant::Lex, Strictness::Strict);
            assert!(c.gates().len() <= 10 * n * n, "n={n}: {}", c.gates().len());
        }
    }
}
