//! Small helpers for `u64` subset masks. Bit `i` stands for element `i + 1`.

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// `n`-character 0/1 string, leftmost character is element 1.
pub fn mask_to_string(mask: u64, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Inverse of [`mask_to_string`]; `None` on any character other than 0/1.
pub fn mask_from_str(s: &str) -> Option<u64> {
    if s.len() > 64 {
        return None;
    }
    let mut mask = 0u64;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => mask |= 1 << i,
            _ => return None,
        }
    }
    Some(mask)
}
