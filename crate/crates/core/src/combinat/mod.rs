//! Combinatorial kernel: words, packing, shuffles, parking functions and
//! the structure maps onto set partitions, trees and segmented compositions.

mod parking;
mod segcomp;
mod setpart;
mod sylvester;
mod tree;
mod word;

pub use parking::{is_parking, max_unpack, parkize, ParkingFunction};
pub use segcomp::{
    enumerate_segmented_compositions, sc_of_word, SegmentedComposition, Separator, Sign,
};
pub use setpart::{from_seg_perm, to_seg_perm, to_set_partition, OrderedSetPartition, SegmentedPermutation};
pub use sylvester::sylvester_classes;
pub use tree::{tree_of_word, PlaneTree};
pub use word::{
    avoids_all, biword_pack, contains_pattern, convolution_split, enumerate_packed_words,
    evaluation, interleavings, is_packed, pack, packed_shifted_shuffle, quasi_shuffle,
    restrict_letters, shifted_concat, shifted_shuffle, shuffle, standardize, Letter, PackedWord,
    Word,
};

pub(crate) use word::{merge_by_mask, subsets};
