//! Small shared helpers: exact binomials and a deterministic RNG.

/// Binomial coefficient C(n, k) as an exact `i64`, zero outside the
/// Pascal triangle. Arguments stay far below overflow at desk scale.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k as i128 {
        acc = acc * (n as i128 - (k as i128 - i)) / i;
    }
    acc as i64
}

/// C(x, k) for real x: x(x-1)...(x-k+1)/k!.
pub fn binomial_real(x: f64, k: u32) -> f64 {
    let mut num = 1.0;
    for j in 0..k {
        num *= x - j as f64;
    }
    let mut den = 1.0;
    for j in 1..=k as u64 {
        den *= j as f64;
    }
    num / den
}

/// SplitMix64: a tiny deterministic generator. Used everywhere a seed is
/// surfaced so that identical seeds reproduce identical runs regardless
/// of external crate versions.
#[derive(Debug, Clone)]
pub struct DetRng {
    state: u64,
}

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng { state: seed }
    }

    /// Derives an independent stream, e.g. one per retry attempt.
    pub fn derive(seed: u64, stream: u64) -> Self {
        let mut rng = DetRng::new(seed ^ stream.wrapping_mul(0x9e3779b97f4a7c15));
        rng.next_u64();
        rng
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` by rejection; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
