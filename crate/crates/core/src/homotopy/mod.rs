//! Rational homotopy of the complement: the Harrison word bicomplex of the
//! relative atomic complex, its column spectral sequence, Massey products,
//! and the k-equal vanishing bound.

pub mod bicomplex;
pub mod massey;
pub mod spectral;

pub use bicomplex::{BiComplex, Truncation, Word};
pub use massey::{
    analyze_system, find_massey_color_systems, massey_d2_class, massey_triple_product, FoundSystem,
    MasseyColorSystem, MasseyReport, TripleProduct,
};
pub use spectral::{spectral_sequence_pages, Page, SpectralSequencePages, WeightPiece};

use crate::error::{Error, Result};

fn check_kequal(l: usize, k: usize) -> Result<()> {
    if k < 2 || k > l {
        return Err(Error::KEqualRange { l, k });
    }
    Ok(())
}

/// Top degree of nonvanishing cohomology of the k-equal complement,
/// `ℓ - 1 + ⌊ℓ/k⌋(k - 2)`.
pub fn kequal_top_degree(l: usize, k: usize) -> Result<usize> {
    check_kequal(l, k)?;
    Ok(l - 1 + (l / k) * (k - 2))
}

/// `6k - 9 > ℓ + ⌊ℓ/k⌋(k - 2)`: the k-equal complement then has no
/// nontrivial Massey products, because every `d_r` with `r ≥ 2` on words of
/// atoms lands above the top degree.
pub fn kequal_no_massey(l: usize, k: usize) -> Result<bool> {
    check_kequal(l, k)?;
    Ok(6 * k > 9 + l + (l / k) * (k - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kequal_inequality() {
        assert!(kequal_no_massey(6, 3).unwrap());
        assert!(!kequal_no_massey(7, 3).unwrap());
        assert!(kequal_no_massey(10, 4).unwrap());
        assert_eq!(kequal_top_degree(6, 3).unwrap(), 7);
        assert_eq!(kequal_top_degree(5, 3).unwrap(), 5);
        assert!(kequal_no_massey(3, 4).is_err());
    }
}
