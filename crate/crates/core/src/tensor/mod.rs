//! The sticky shuffle Hopf algebra `T(L)` over the planar Itô algebra.
//!
//! Elements are sparse exact formal sums of [`TensorWord`]s. The product is
//! the sticky shuffle, the unit is the empty word, the coproduct is
//! deconcatenation and the counit reads off the scalar part.

mod element;
mod multi;
mod shuffle;
mod word;

pub use element::{counit, TensorElement};
pub use multi::{
    coproduct, iterated_coproduct, multirank_component, multitensor_product, multitensor_product_capped,
    recover_component, MultiTensorElement,
};
pub use shuffle::{
    power, product, product_capped, product_with_table, shuffle_words_recursive, shuffle_words_subsets,
    shuffle_words_subsets_counted,
};
pub use word::TensorWord;
