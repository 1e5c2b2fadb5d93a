//! Small shared helpers.

/// Maps `f` over `0..len` in index order, optionally splitting the range
/// across `jobs` threads. Results are reassembled in index order, so the
/// output is independent of the thread count.
pub(crate) fn map_indexed<T, F>(len: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.max(1).min(len.max(1));
    if jobs == 1 {
        return (0..len).map(f).collect();
    }
    let chunk = len.div_ceil(jobs);
    let mut out: Vec<Vec<T>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for j in 0..jobs {
            let lo = j * chunk;
            let hi = ((j + 1) * chunk).min(len);
            let f = &f;
            handles.push(scope.spawn(move || (lo..hi).map(f).collect::<Vec<T>>()));
        }
        for h in handles {
            out.push(h.join().expect("worker thread panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// Intersection of sorted u32 slices, two-pointer.
pub(crate) fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
