use crate::graph::Graph;

use super::Coloring;

/// Greedy DSATUR colouring. The next vertex is the uncoloured one with the
/// highest saturation, then the highest degree among uncoloured vertices,
/// then the lowest index; it takes the smallest colour not on a neighbour.
pub fn dsatur_upper(g: &Graph) -> Coloring {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; n];
    // forbidden[v] is a bitset over colours 0..n
    let cw = n.div_ceil(64).max(1);
    let mut forbidden = vec![0u64; n * cw];
    let mut sat = vec![0usize; n];
    let mut uncolored: Vec<u64> = vec![0; g.words()];
    for v in 0..n {
        uncolored[v / 64] |= 1 << (v % 64);
    }
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| {
                let udeg: u32 = g
                    .row(v)
                    .iter()
                    .zip(&uncolored)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                (sat[v], udeg, std::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains");
        let f = &forbidden[v * cw..(v + 1) * cw];
        let c = f
            .iter()
            .enumerate()
            .find(|(_, &w)| w != u64::MAX)
            .map(|(i, &w)| i * 64 + (!w).trailing_zeros() as usize)
            .expect("a free colour exists below n");
        color[v] = c;
        uncolored[v / 64] &= !(1 << (v % 64));
        for w in g.neighbors(v) {
            let slot = &mut forbidden[w * cw + c / 64];
            if *slot >> (c % 64) & 1 == 0 {
                *slot |= 1 << (c % 64);
                sat[w] += 1;
            }
        }
    }
    Coloring::tight(color)
}
