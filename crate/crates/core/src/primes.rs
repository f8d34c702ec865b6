//! Prime generation and testing: a plain odds-only sieve, a segmented sieve
//! for ranges up to 2^40, and a deterministic Miller-Rabin test for the full
//! 64-bit domain.

use crate::error::{Error, Result};
use crate::modarith::{mul_mod_raw, pow_mod_raw};

/// Upper ceiling (exclusive) for range endpoints served by the segmented sieve.
pub const RANGE_CEILING: u64 = 1 << 40;

/// Upper ceiling (inclusive) for the plain sieve; use [`primes_in_range`] beyond.
pub const SIEVE_CEILING: u64 = 1 << 32;

/// Odd numbers per segment window of the segmented sieve (spans 2x this range).
pub const SEGMENT_ODDS: usize = 1 << 20;

/// An inclusive interval of 64-bit naturals, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeRange {
    lo: u64,
    hi: u64,
}

impl PrimeRange {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::RangeOrder { lo, hi });
        }
        if hi >= RANGE_CEILING {
            return Err(Error::Capacity {
                what: "range endpoint",
                requested: hi,
                ceiling: RANGE_CEILING - 1,
            });
        }
        Ok(PrimeRange { lo, hi })
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // lo <= hi always holds
    }
}

/// All primes `<= limit`, ascending.
///
/// Odds-only bit sieve; rejects limits above [`SIEVE_CEILING`].
pub fn sieve_upto(limit: u64) -> Result<Vec<u64>> {
    if limit > SIEVE_CEILING {
        return Err(Error::Capacity {
            what: "sieve limit",
            requested: limit,
            ceiling: SIEVE_CEILING,
        });
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let n = limit as usize;
    // index i (i >= 1) represents the odd number 2i + 1
    let half = (n - 1) / 2;
    let mut composite = BitVec::zeroed(half + 1);
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite.get(i) {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j <= half {
                composite.set(j);
                j += p;
            }
        }
        i += 1;
    }
    let estimate = if n > 16 {
        (n as f64 / (n as f64).ln() * 1.15) as usize
    } else {
        8
    };
    let mut primes = Vec::with_capacity(estimate);
    primes.push(2);
    for i in 1..=half {
        if !composite.get(i) {
            primes.push((2 * i + 1) as u64);
        }
    }
    Ok(primes)
}

/// Streams every prime in `range` to `f`, ascending, in bounded memory.
pub fn for_each_prime_in_range<F: FnMut(u64)>(range: PrimeRange, mut f: F) {
    let (lo, hi) = (range.lo(), range.hi());
    if hi < 2 {
        return;
    }
    if lo <= 2 {
        f(2);
    }
    // remaining candidates are odd numbers in [max(lo, 3), hi]
    let mut odd_lo = lo.max(3);
    if odd_lo % 2 == 0 {
        odd_lo += 1;
    }
    if odd_lo > hi {
        return;
    }
    let base = base_primes(hi);
    let mut window = BitVec::zeroed(SEGMENT_ODDS);
    let mut seg_lo = odd_lo;
    while seg_lo <= hi {
        let span = 2 * (SEGMENT_ODDS as u64 - 1);
        let seg_hi = hi.min(seg_lo.saturating_add(span));
        let slots = ((seg_hi - seg_lo) / 2 + 1) as usize;
        window.clear(slots);
        for &p in base.iter().skip(1) {
            // first odd multiple of p in [max(p^2, seg_lo), seg_hi]
            let mut m = p * p;
            if m < seg_lo {
                m = seg_lo.div_ceil(p) * p;
                if m % 2 == 0 {
                    m += p;
                }
            }
            if m > seg_hi {
                continue;
            }
            let mut idx = ((m - seg_lo) / 2) as usize;
            while idx < slots {
                window.set(idx);
                idx += p as usize;
            }
        }
        for idx in 0..slots {
            if !window.get(idx) {
                let candidate = seg_lo + 2 * idx as u64;
                if candidate > 1 {
                    f(candidate);
                }
            }
        }
        match seg_hi.checked_add(2) {
            Some(next) => seg_lo = next,
            None => break,
        }
    }
}

/// All primes in `range`, ascending. Equivalent to filtering `sieve_upto(hi)`.
pub fn primes_in_range(range: PrimeRange) -> Vec<u64> {
    let estimate = if range.hi() > 16 {
        let x = range.hi() as f64;
        let lo_est = if range.lo() > 16 {
            range.lo() as f64 / (range.lo() as f64).ln()
        } else {
            0.0
        };
        ((x / x.ln() - lo_est) * 1.2) as usize + 16
    } else {
        8
    };
    let mut out = Vec::with_capacity(estimate);
    for_each_prime_in_range(range, |p| out.push(p));
    out
}

/// Counts the primes in `range` without materializing them.
pub fn count_primes_in_range(range: PrimeRange) -> u64 {
    let mut n = 0u64;
    for_each_prime_in_range(range, |_| n += 1);
    n
}

fn base_primes(hi: u64) -> Vec<u64> {
    let root = hi.isqrt();
    sieve_upto(root).expect("sqrt of range ceiling is below the sieve ceiling")
}

/// Deterministic primality test, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n odd, > 37: Miller-Rabin with a witness set covering all u64
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_raw(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_raw(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Plain word-packed bit vector; just enough for the sieves.
struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    fn zeroed(bits: usize) -> Self {
        BitVec {
            words: vec![0u64; bits.div_ceil(64)],
        }
    }

    fn clear(&mut self, bits: usize) {
        let words = bits.div_ceil(64);
        if words > self.words.len() {
            self.words.resize(words, 0);
        }
        for w in &mut self.words[..words] {
            *w = 0;
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
}
