//! Named arrangements used in tests, examples and the guide.

use crate::arrangement::{points_on_conic, PointSet};

/// The three coordinate axes: `[1:0:0], [0:1:0], [0:0:1]`.
pub fn coordinate_points() -> PointSet {
    PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("distinct points")
}

/// Three points on the line `z = 0`.
pub fn three_collinear() -> PointSet {
    PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]).expect("distinct points")
}

/// Three collinear points plus one off the line; its envelope `Z_2` is a
/// line together with a point.
pub fn three_collinear_plus_one() -> PointSet {
    PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]).expect("distinct points")
}

/// The smooth conic through [`six_on_conic`].
pub const CONIC: &str = "y^2 - x*z";

/// Six points `[1:t:t^2]` on the conic `y^2 = xz`.
pub fn six_on_conic() -> PointSet {
    points_on_conic(&[0, 1, -1, 2, -2, 3], false).expect("distinct points")
}

/// The smooth cubic through [`eleven_on_cubic`].
pub const CUBIC: &str = "y^2*z - x^3 - 17*z^3";

/// Eleven integral points on `y^2 = x^3 + 17`; quartics through them cut
/// the cubic in one further point.
pub fn eleven_on_cubic() -> PointSet {
    PointSet::from_ints(&[
        [-2, 3, 1],
        [-2, -3, 1],
        [-1, 4, 1],
        [-1, -4, 1],
        [2, 5, 1],
        [2, -5, 1],
        [4, 9, 1],
        [4, -9, 1],
        [8, 23, 1],
        [8, -23, 1],
        [43, 282, 1],
    ])
    .expect("distinct points")
}
