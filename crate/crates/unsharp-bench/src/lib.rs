//! Shared helpers for the criterion benches: the in-memory fixture
//! algebra and frame used by every suite.

use unsharp_core::tense::TimeFrame;
use unsharp_core::{format, EffectAlgebra};

pub const NINE_ELEMENT: &str = "\
[elements]
0 a b c d c' b' a' 1
[zero] 0
[one] 1
[plus]
0:  0  a  b  c  d  c' b' a' 1
a:  a  -  c' b' -  -  -  1  -
b:  b  c' d  a' b' -  1  -  -
c:  c  b' a' -  -  1  -  -  -
d:  d  -  b' -  1  -  -  -  -
c': c' -  -  1  -  -  -  -  -
b': b' -  1  -  -  -  -  -  -
a': a' 1  -  -  -  -  -  -  -
1:  1  -  -  -  -  -  -  -  -
";

pub fn nine_element() -> EffectAlgebra {
    format::load_algebra(NINE_ELEMENT).expect("fixture validates")
}

pub fn chain_frame() -> TimeFrame {
    TimeFrame::new(
        vec!["1".into(), "2".into(), "3".into()],
        &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)],
    )
    .expect("nonempty frame")
}
