#![no_main]

use cliffan::algebra::{Multivector, Rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for dim in [1, 3, 5] {
        if let Ok(m) = Multivector::<Rational>::parse(dim, text) {
            let again = Multivector::<Rational>::parse(dim, &m.to_text()).expect("printed form parses");
            assert_eq!(again, m);
        }
    }
});
