//! The two φ-maps on words: standardization and packing.
//!
//! `std` renumbers the letters of a word part by part so that the result is
//! a permutation with the same inversions; `pack` renumbers them so that the
//! result is the lexicographically least word with the same ordered set
//! partition of positions. Their fixed points — permutations and packed
//! words — index the bases of FQSym and WQSym.
//!
//! Run with `cargo run --example phi_maps`.

use hopfcomb::words::{apply_phi, check_refinement, enumerate_canonical, is_canonical, part};
use hopfcomb::{PhiMap, Word};

fn main() {
    // The classic worked rows for both maps.
    let std_rows = [
        ("7,2,14,3,7", "31524"),
        ("23,14,5,92", "3214"),
        ("42135", "42135"),
        ("151155", "142356"),
    ];
    let pack_rows = [
        ("3,13,3,2,13", "23213"),
        ("222582", "111231"),
        ("42135", "42135"),
        ("23112", "23112"),
    ];

    println!("standardization:");
    for (input, expected) in std_rows {
        let w: Word = input.parse().unwrap();
        let image = apply_phi(PhiMap::Std, &w);
        println!("  std({w}) = {image}");
        assert_eq!(image, expected.parse().unwrap());
    }

    println!("packing:");
    for (input, expected) in pack_rows {
        let w: Word = input.parse().unwrap();
        let image = apply_phi(PhiMap::Pack, &w);
        println!("  pack({w}) = {image}");
        assert_eq!(image, expected.parse().unwrap());
    }

    // pack preserves the ordered set partition of positions exactly; std
    // splits its blocks into singletons while keeping their relative
    // order. Both maps are idempotent: the image is always canonical.
    let w: Word = "13231".parse().unwrap();
    println!("part({w}) = {:?}", part(&w));
    assert_eq!(part(&apply_phi(PhiMap::Pack, &w)), part(&w));
    for phi in [PhiMap::Std, PhiMap::Pack] {
        let image = apply_phi(phi, &w);
        assert!(is_canonical(phi, &image));
    }

    // Canonical words are counted by n! (permutations) and by the ordered
    // Bell numbers (packed words).
    let perms: Vec<usize> = (0..=5)
        .map(|n| enumerate_canonical(PhiMap::Std, n).len())
        .collect();
    let packed: Vec<usize> = (0..=5)
        .map(|n| enumerate_canonical(PhiMap::Pack, n).len())
        .collect();
    println!("|std-canonical| by length:  {perms:?}");
    println!("|pack-canonical| by length: {packed:?}");
    assert_eq!(perms, [1, 1, 2, 6, 24, 120]);
    assert_eq!(packed, [1, 1, 3, 13, 75, 541]);

    // std factors through pack — std(pack(u)) = std(u) for every word —
    // but the converse fails, and the checker produces a witness.
    let (ok, none) = check_refinement(PhiMap::Std, PhiMap::Pack, 5);
    assert!(ok && none.is_none());
    let (ok, witness) = check_refinement(PhiMap::Pack, PhiMap::Std, 5);
    assert!(!ok);
    let witness = witness.unwrap();
    println!(
        "std ≺ pack holds up to length 5; pack ≺ std fails at {witness}: \
         pack(std({witness})) = {} but pack({witness}) = {}",
        apply_phi(PhiMap::Pack, &apply_phi(PhiMap::Std, &witness)),
        apply_phi(PhiMap::Pack, &witness),
    );
}
