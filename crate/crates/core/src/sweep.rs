//! Word enumeration, seeded sampling and batch evaluation.
//!
//! [`par_map`] fans out over rayon when the `parallel` feature is on (the
//! default) and degrades to [`seq_map`] otherwise. Output order always
//! matches input order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Generator};
use crate::error::Result;
use crate::invariants::{report, InvariantReport};

const LETTERS: [(Generator, i64); 4] = [
    (Generator::A, 1),
    (Generator::B, 1),
    (Generator::A, -1),
    (Generator::B, -1),
];

/// Every freely reduced word with at most `max_len` letters, the identity
/// included. There are 4·3^(n−1) words of each length n ≥ 1.
pub fn reduced_words(max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::identity()];
    let mut frontier: Vec<(BraidWord, usize)> = vec![(BraidWord::identity(), usize::MAX)];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for (w, last) in &frontier {
            for (i, &(g, e)) in LETTERS.iter().enumerate() {
                if *last != usize::MAX && i == (*last + 2) % 4 {
                    continue;
                }
                let mut v = w.clone();
                v.push(g, e);
                next.push((v, i));
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

/// Word of `len` letters drawn uniformly from a±1, b±1 (cancellations are
/// merged, so the result can be shorter).
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> BraidWord {
    let mut w = BraidWord::identity();
    for _ in 0..len {
        let (g, e) = LETTERS[rng.gen_range(0..4)];
        w.push(g, e);
    }
    w
}

/// `count` words with lengths uniform in `1..=max_len`, reproducible from
/// `seed`.
pub fn random_words(seed: u64, count: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            random_word(&mut rng, len)
        })
        .collect()
}

pub fn seq_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    seq_map(items, f)
}

/// Invariant reports for a batch of words, in input order.
pub fn evaluate_batch(words: &[BraidWord]) -> Vec<Result<InvariantReport>> {
    par_map(words, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_counts() {
        let words = reduced_words(4);
        assert_eq!(words.len(), 1 + 4 + 12 + 36 + 108);
        assert!(words.iter().all(|w| w.letter_len() == w.letters().count()));
        let mut lens = vec![0usize; 5];
        for w in &words {
            lens[w.letter_len()] += 1;
        }
        assert_eq!(lens, vec![1, 4, 12, 36, 108]);
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        assert_eq!(random_words(7, 20, 30), random_words(7, 20, 30));
        assert_ne!(random_words(7, 20, 30), random_words(8, 20, 30));
        assert!(random_words(1, 50, 10).iter().all(|w| w.letter_len() <= 10));
    }

    #[test]
    fn parallel_matches_sequential() {
        let words = random_words(3, 64, 12);
        let a = par_map(&words, |w| w.writhe());
        let b = seq_map(&words, |w| w.writhe());
        assert_eq!(a, b);
    }
}
