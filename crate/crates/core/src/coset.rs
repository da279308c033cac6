//! Affine blocks as minimal length representatives of the right cosets
//! `w · W(A_n)`.

use crate::affine::{first_pair_in_range, junction_ok, AffineBlock, Element, Pair};
use crate::error::{Error, Result};
use crate::finite::FiniteElement;
use crate::word::Rank;

/// Default cap on the number of enumerated blocks.
pub const DEFAULT_BLOCK_CAP: usize = 5_000_000;

/// All affine blocks of a given affine length, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFamily {
    pub rank: Rank,
    pub affine_length: usize,
    pub items: Vec<AffineBlock>,
}

pub fn enumerate_blocks(rank: Rank, m: usize) -> Result<BlockFamily> {
    enumerate_blocks_capped(rank, m, DEFAULT_BLOCK_CAP)
}

/// Depth-first extension with the pairwise inequalities as pruning.
pub fn enumerate_blocks_capped(rank: Rank, m: usize, cap: usize) -> Result<BlockFamily> {
    let n = rank.n();
    let mut items = Vec::new();
    let mut stack: Vec<Pair> = Vec::with_capacity(m);
    fn extend(
        n: usize,
        rank: Rank,
        m: usize,
        cap: usize,
        stack: &mut Vec<Pair>,
        items: &mut Vec<AffineBlock>,
    ) -> Result<()> {
        if stack.len() == m {
            if items.len() == cap {
                return Err(Error::ResourceGuard(cap));
            }
            items.push(AffineBlock::from_pairs_unchecked(rank, stack.clone()));
            return Ok(());
        }
        for j in 1..=n + 1 {
            for i in 0..n {
                let ok = match stack.last() {
                    None => first_pair_in_range(n, (j, i)),
                    Some(&prev) => junction_ok(n, prev, (j, i)),
                };
                if ok {
                    stack.push((j, i));
                    extend(n, rank, m, cap, stack, items)?;
                    stack.pop();
                }
            }
        }
        Ok(())
    }
    extend(n, rank, m, cap, &mut stack, &mut items)?;
    Ok(BlockFamily {
        rank,
        affine_length: m,
        items,
    })
}

/// The minimal length element of `e · W(A_n)`: the block alone.
pub fn coset_rep(e: &Element) -> Element {
    Element::new(e.block().clone(), FiniteElement::identity(e.rank()))
        .expect("block and finite part share a rank")
}
