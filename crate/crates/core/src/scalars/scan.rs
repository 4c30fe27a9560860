use rayon::prelude::*;

/// Visits every vector in `alphabet^len` (first coordinate most significant)
/// in parallel, folding each worker's results with `merge`.
///
/// Work is split on the leading two coordinates; each task walks the rest
/// with an odometer.
pub fn scan_vectors<A, I, F, M>(len: usize, alphabet: &[u64], init: I, visit: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[u64]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let base = alphabet.len();
    if base == 0 {
        return init();
    }
    let split = len.min(2);
    let prefixes = base.pow(split as u32);
    (0..prefixes)
        .into_par_iter()
        .map(|prefix| {
            let mut acc = init();
            let mut digits = vec![0usize; len];
            let mut p = prefix;
            for d in (0..split).rev() {
                digits[d] = p % base;
                p /= base;
            }
            let mut v: Vec<u64> = digits.iter().map(|&d| alphabet[d]).collect();
            loop {
                visit(&mut acc, &v);
                let mut pos = len;
                loop {
                    if pos == split {
                        return acc;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < base {
                        v[pos] = alphabet[digits[pos]];
                        break;
                    }
                    digits[pos] = 0;
                    v[pos] = alphabet[0];
                }
            }
        })
        .reduce(&init, &merge)
}
