//! Execution strategy for the embarrassingly parallel inner loops: subset
//! scans and batch checks run either sequentially or on the rayon pool.
//! Results are always merged back in input order, so both modes return
//! byte-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How batch work is executed. `Parallel` requires the `parallel` feature
/// (on by default); without it the enum only has the sequential variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

/// Minimum number of items before the parallel mode actually forks; tiny
/// batches stay on the calling thread.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 64;

/// Applies `f` to every item, preserving input order in the output.
pub(crate) fn map_items<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            if items.len() < PARALLEL_THRESHOLD {
                items.into_iter().map(f).collect()
            } else {
                items.into_par_iter().map(f).collect()
            }
        }
    }
}

/// Collects every mask in `0..=full` satisfying `keep`, in ascending order.
pub(crate) fn filter_masks<F>(mode: ExecMode, full: u32, keep: F) -> Vec<u32>
where
    F: Fn(u32) -> bool + Sync + Send,
{
    let count = full as u64 + 1;
    match mode {
        ExecMode::Sequential => (0..count).map(|m| m as u32).filter(|&m| keep(m)).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            if count < PARALLEL_THRESHOLD as u64 {
                (0..count).map(|m| m as u32).filter(|&m| keep(m)).collect()
            } else {
                // Chunked scan; chunks come back in index order, so the
                // concatenation is ascending like the sequential path.
                let chunk: u64 = 1 << 12;
                let chunks: Vec<u64> = (0..count.div_ceil(chunk)).collect();
                chunks
                    .into_par_iter()
                    .map(|c| {
                        let lo = c * chunk;
                        let hi = (lo + chunk).min(count);
                        (lo..hi)
                            .map(|m| m as u32)
                            .filter(|&m| keep(m))
                            .collect::<Vec<u32>>()
                    })
                    .reduce(Vec::new, |mut acc, mut part| {
                        acc.append(&mut part);
                        acc
                    })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u32> = (0..1000).collect();
        let doubled = map_items(ExecMode::default(), items.clone(), |x| x * 2);
        assert_eq!(doubled, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn filter_masks_is_ascending_and_mode_independent() {
        let keep = |m: u32| m.count_ones() == 3;
        let seq = filter_masks(ExecMode::Sequential, (1 << 16) - 1, keep);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        #[cfg(feature = "parallel")]
        {
            let par = filter_masks(ExecMode::Parallel, (1 << 16) - 1, keep);
            assert_eq!(seq, par);
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_reduce_handles_partial_final_chunk() {
        // 2^12 does not divide 3000, so the last chunk is short.
        let seq = filter_masks(ExecMode::Sequential, 2999, |m| m % 7 == 0);
        let par = filter_masks(ExecMode::Parallel, 2999, |m| m % 7 == 0);
        assert_eq!(seq, par);
    }
}
