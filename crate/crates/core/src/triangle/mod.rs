//! Combinatorial core: ASMs, monotone triangles, and refined counts.

pub mod asm;
pub mod count;
pub mod product;

pub use asm::{
    asm_to_mt, enumerate_asms, enumerate_complete_triangles, interlacing_rows, mt_to_asm, Asm,
    MonotoneTriangle,
};
pub use count::{
    alpha_count, build_table, build_table_with, increasing_tuples, refined_count,
    refined_count_with, AlphaCounter, BottomRow, Budget, RefinedTable,
};
pub use product::{asm_total_product, refined_product};
