#!/usr/bin/env python3
"""Regenerates the checked-in test images under tests/data/.

cover256.pgm   -- the scikit-image "camera" picture, 2x2 box-downsampled to 256x256
secret1.pbm    -- 32x32 filled disc
secret2.pbm    -- 32x32 bold "T" glyph inside a frame
"""
import pathlib
import sys

import numpy as np
from skimage import data


def write_pgm(path, img):
    h, w = img.shape
    path.write_bytes(b"P5\n%d %d\n255\n" % (w, h) + img.astype(np.uint8).tobytes())


def write_pbm(path, bits):
    h, w = bits.shape
    packed = np.packbits(bits.astype(np.uint8), axis=1)
    path.write_bytes(b"P4\n%d %d\n" % (w, h) + packed.tobytes())


def cover():
    cam = data.camera().astype(np.float64)
    small = cam.reshape(256, 2, 256, 2).mean(axis=(1, 3))
    return np.clip(np.floor(small + 0.5), 0, 255).astype(np.uint8)


def disc():
    y, x = np.mgrid[0:32, 0:32]
    return ((x - 15.5) ** 2 + (y - 15.5) ** 2 <= 12.8 ** 2).astype(np.uint8)


def glyph():
    s = np.zeros((32, 32), np.uint8)
    s[0:32, 0:3] = 1
    s[0:32, 29:32] = 1
    s[0:3, :] = 1
    s[29:32, :] = 1
    s[7:13, 7:25] = 1   # T bar
    s[13:25, 13:19] = 1  # T stem
    return s


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "tests" / "data")
    out.mkdir(parents=True, exist_ok=True)
    write_pgm(out / "cover256.pgm", cover())
    write_pbm(out / "secret1.pbm", disc())
    write_pbm(out / "secret2.pbm", glyph())


if __name__ == "__main__":
    main()
