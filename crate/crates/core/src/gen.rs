//! Deterministic corpora.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symbol number `r` of an alphabet of size `sigma`: letters from `a` for
/// alphabets of at most 26 symbols, raw bytes otherwise.
fn symbol(r: usize, sigma: usize) -> u8 {
    if sigma <= 26 {
        b'a' + r as u8
    } else {
        r as u8
    }
}

/// Uniform random text over `sigma ∈ [1, 256]` symbols.
pub fn random(n: usize, sigma: usize, seed: u64) -> Vec<u8> {
    assert!((1..=256).contains(&sigma));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| symbol(rng.random_range(0..sigma), sigma)).collect()
}

/// Letter frequencies of English prose in tenths of a percent, `a` to `z`,
/// followed by the space.
const ENGLISH_WEIGHTS: [u32; 27] = [
    82, 15, 28, 43, 127, 22, 20, 61, 70, 2, 8, 40, 24, 67, 75, 19, 1, 60, 63, 91, 28, 10, 24, 2,
    20, 1, 180,
];

/// Random text with the letter and space frequencies of English prose.
pub fn english_like(n: usize, seed: u64) -> Vec<u8> {
    let total: u32 = ENGLISH_WEIGHTS.iter().sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut r = rng.random_range(0..total);
            let mut k = 0;
            while r >= ENGLISH_WEIGHTS[k] {
                r -= ENGLISH_WEIGHTS[k];
                k += 1;
            }
            if k == 26 { b' ' } else { b'a' + k as u8 }
        })
        .collect()
}

/// Prefix of the infinite Fibonacci word `abaababaabaab…`.
pub fn fibonacci(n: usize) -> Vec<u8> {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    b
}

/// Prefix of the Thue–Morse sequence over `{a, b}`.
pub fn thue_morse(n: usize) -> Vec<u8> {
    (0..n).map(|i| if (i as u64).count_ones() % 2 == 0 { b'a' } else { b'b' }).collect()
}

/// The Lyndon word of the first `sigma` symbols, repeated.
pub fn periodic(n: usize, sigma: usize) -> Vec<u8> {
    (0..n).map(|i| symbol(i % sigma, sigma)).collect()
}

/// `abc…` over the first `n` symbols.
pub fn increasing(n: usize) -> Vec<u8> {
    (0..n).map(|i| symbol(i, n)).collect()
}
