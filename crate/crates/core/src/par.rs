//! Ordered map helpers that fan out over rayon when the `parallel` feature
//! is enabled (the default) and degrade to plain sequential iteration when it
//! is not. Output order is identical in both modes, so every caller stays
//! deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Reports whether this build runs the parallel code paths.
pub fn parallelism_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Maps `f` over `items`, preserving order.
pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Flat-maps `f` over `items`, concatenating the per-item results in order.
pub fn flat_map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().flat_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_ordered_preserves_order() {
        let xs: Vec<u32> = (0..1000).collect();
        let ys = map_ordered(xs.clone(), |x| x * 2);
        assert_eq!(ys, xs.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn flat_map_ordered_preserves_order() {
        let xs: Vec<u32> = (0..200).collect();
        let ys = flat_map_ordered(xs.clone(), |x| vec![x, x + 1]);
        let expect: Vec<u32> = xs.iter().flat_map(|&x| vec![x, x + 1]).collect();
        assert_eq!(ys, expect);
    }
}
