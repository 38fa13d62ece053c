//! Basis blades as bitmasks. Bit `i` set means generator `e_{i+1}` is a factor;
//! factors are kept in increasing index order.

pub type Blade = u32;

pub const MAX_DIM: usize = 16;

pub fn grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Parity of the transpositions needed to sort the concatenation `a ++ b`.
fn reorder_parity(a: Blade, b: Blade) -> u32 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1
}

/// Product of two basis blades under `e_j² = −1`: returns the sign and the
/// resulting blade.
pub fn blade_product(a: Blade, b: Blade) -> (bool, Blade) {
    let parity = reorder_parity(a, b) + (a & b).count_ones();
    (parity & 1 == 1, a ^ b)
}

/// Sign of the reversion on a blade of the given grade.
pub fn reversion_negates(grade: u32) -> bool {
    (grade * grade.saturating_sub(1) / 2) & 1 == 1
}

/// Sign of Clifford conjugation (reversion composed with the grade involution).
pub fn conjugation_negates(grade: u32) -> bool {
    (grade * (grade + 1) / 2) & 1 == 1
}

pub fn grade_involution_negates(grade: u32) -> bool {
    grade & 1 == 1
}

/// Generator indices (1-based) of a blade in increasing order.
pub fn indices(b: Blade) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| b >> i & 1 == 1).map(|i| i + 1)
}
