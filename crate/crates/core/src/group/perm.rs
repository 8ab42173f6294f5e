use crate::error::GroupError;

/// A permutation of `{1..degree}` stored as its image list.
///
/// Composition follows the right-action convention: `a.then(&b)` maps a point
/// `i` to `b(a(i))`, so products read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from 1-based images. Fails unless `images` is a
    /// bijection on `1..=images.len()`.
    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut zero_based = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(GroupError::InvalidPermutation {
                    degree,
                    images: images.to_vec(),
                });
            }
            seen[img - 1] = true;
            zero_based.push((img - 1) as u32);
        }
        Ok(Self { images: zero_based })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }
}
