//! A rank engine that fans batches out to OS threads.
//!
//! The core library batches the ranks each homology table needs through
//! [`RankEngine::ranks`]; this wrapper distributes a batch over scoped
//! threads with a shared work queue, delegating the per-matrix arithmetic
//! to an inner engine. One matrix is still computed on one thread — the
//! parallelism is across the batch, which is where the independent work
//! lives.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use hochex_core::linalg::RankEngine;
use hochex_core::SparseMatrix;

/// Fans [`RankEngine::ranks`] batches out over `workers` scoped threads.
pub struct ParallelEngine {
    inner: Box<dyn RankEngine>,
    workers: usize,
}

impl ParallelEngine {
    /// Wraps `inner`; `workers` ≤ 1 keeps everything sequential.
    pub fn new(inner: Box<dyn RankEngine>, workers: usize) -> Self {
        ParallelEngine { inner, workers: workers.max(1) }
    }
}

impl RankEngine for ParallelEngine {
    fn rank(&self, m: &SparseMatrix) -> usize {
        self.inner.rank(m)
    }

    fn ranks(&self, ms: &[&SparseMatrix]) -> Vec<usize> {
        let threads = self.workers.min(ms.len());
        if threads <= 1 {
            return self.inner.ranks(ms);
        }
        let next = AtomicUsize::new(0);
        let results = Mutex::new(vec![0usize; ms.len()]);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= ms.len() {
                        break;
                    }
                    let r = self.inner.rank(ms[i]);
                    results.lock().expect("rank workers do not panic")[i] = r;
                });
            }
        });
        results.into_inner().expect("rank workers do not panic")
    }

    fn certified(&self) -> bool {
        self.inner.certified()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hochex_core::linalg::ExactEngine;
    use hochex_core::rat::rat_int;

    #[test]
    fn fanned_batches_match_sequential_answers() {
        let mats: Vec<SparseMatrix> = (1..=20)
            .map(|n| {
                let mut m = SparseMatrix::zero(n, n);
                for i in 0..n {
                    m.set(i, i, rat_int(if i % 3 == 0 { 0 } else { 1 }));
                }
                m
            })
            .collect();
        let refs: Vec<&SparseMatrix> = mats.iter().collect();
        let seq = ExactEngine.ranks(&refs);
        let par = ParallelEngine::new(Box::new(ExactEngine), 4).ranks(&refs);
        assert_eq!(seq, par);
    }
}
