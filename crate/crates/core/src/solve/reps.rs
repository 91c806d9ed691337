use crate::model::Layer;

/// Lexicographically least representatives of the isotopy classes of Latin
/// squares of orders 1 to 5, row-major and zero-based.
const REPS: &[&[&[u8]]] = &[
    &[&[0]],
    &[&[0, 1, 1, 0]],
    &[&[0, 1, 2, 1, 2, 0, 2, 0, 1]],
    &[
        &[0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0],
        &[0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1],
    ],
    &[
        &[0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1, 3, 4, 1, 2, 0, 4, 2, 0, 1, 3],
        &[0, 1, 2, 3, 4, 1, 2, 3, 4, 0, 2, 3, 4, 0, 1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3],
    ],
];

/// Stored isotopy class representatives of order `n` as 2-dimensional layers,
/// or `None` beyond the stored orders.
pub fn isotopy_representatives(n: usize) -> Option<Vec<Layer>> {
    let reps = REPS.get(n.checked_sub(1)?)?;
    Some(reps.iter().map(|c| Layer::new(2, n, c.to_vec()).unwrap()).collect())
}
