//! Batch helpers that fan out over rayon when the `parallel` feature is on
//! and run in order otherwise. Results always come back in input order.

/// Sequential map over `0..len`.
pub fn map_range_seq<R, F>(len: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..len).map(f).collect()
}

/// Parallel map over `0..len`.
#[cfg(feature = "parallel")]
pub fn map_range_par<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

/// Map over `0..len` with whichever backend is compiled in.
pub fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_range_par(len, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(len, f)
    }
}

/// Map over a slice, order preserved.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_range(items.len(), |i| f(&items[i]))
}

/// Stable per-trial seed derived from a base seed and a trial coordinate.
pub fn trial_seed(base: u64, stream: u64, index: u64) -> u64 {
    // splitmix64 finaliser over the combined words
    let mut z = base
        .wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
