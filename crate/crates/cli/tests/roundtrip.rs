use std::path::Path;

use proptest::prelude::*;
use qframe_cli::format::parse_frame_str;
use qframe_cli::FrameFile;

fn finite() -> impl Strategy<Value = f64> {
    any::<u64>().prop_map(f64::from_bits).prop_filter("finite", |x| x.is_finite())
}

fn frame_file() -> impl Strategy<Value = FrameFile> {
    (1usize..=4, 1usize..=6).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(prop::collection::vec(prop::array::uniform4(finite()), n), m),
            prop::option::of(".*"),
        )
            .prop_map(move |(vectors, label)| FrameFile { dimension: n, vectors, label })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parse_of_emit_is_bit_identical(file in frame_file()) {
        let text = file.emit();
        let back = parse_frame_str(&text, Path::new("prop.json")).unwrap();
        prop_assert_eq!(&back.label, &file.label);
        for (a, b) in back.vectors.iter().flatten().flatten().zip(file.vectors.iter().flatten().flatten()) {
            prop_assert_eq!(a.to_bits(), b.to_bits());
        }
        prop_assert_eq!(back.emit(), text);
    }
}
