#!/usr/bin/env python3
"""Regenerates the committed corpus fixtures (images, OCR, annotations).

The fixture geometry is hand-derived; see corpus/DERIVATION.md for the
expected label-map pixel counts. Rerunning this script must reproduce the
committed files byte for byte (PNG encoder permitting).
"""

import json
import os

import cv2
import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
CORPUS = os.path.join(HERE, "corpus")


def ink(img, x, y, w, h):
    img[y:y + h, x:x + w] = 0


def write_png(path, img):
    ok = cv2.imwrite(path, img)
    assert ok, path


def rect_points(x, y, w, h):
    """Inclusive-corner rectangle, matching the box pixel range [x,x+w)x[y,y+h)."""
    x1, y1 = x + w - 1, y + h - 1
    return f"{x},{y} {x1},{y} {x1},{y1} {x},{y1}"


def pagexml(page_id, width, height, lines):
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<PcGts xmlns="http://schema.primaresearch.org/PAGE/gts/pagecontent/2019-07-15">',
        f'  <Page imageFilename="{page_id}.png" imageWidth="{width}" imageHeight="{height}">',
        '    <TextRegion id="r1">',
    ]
    for i, (rect, text) in enumerate(lines, 1):
        parts.append(f'      <TextLine id="l{i}">')
        parts.append(f'        <Coords points="{rect_points(*rect)}"/>')
        parts.append('        <TextEquiv conf="0.97">')
        parts.append(f'          <Unicode>{text}</Unicode>')
        parts.append('        </TextEquiv>')
        parts.append('      </TextLine>')
    parts += ['    </TextRegion>', '  </Page>', '</PcGts>', '']
    return "\n".join(parts)


def main():
    os.makedirs(os.path.join(CORPUS, "images"), exist_ok=True)
    os.makedirs(os.path.join(CORPUS, "ocr"), exist_ok=True)

    # --- page_001: the mask-pipeline fixture (3 segments + exclusions) ---
    img1 = np.full((60, 80), 255, np.uint8)
    ink(img1, 12, 7, 16, 2)    # I1 in title T          -> segment 1 (32 px)
    ink(img1, 12, 20, 20, 3)   # I2 in text B1          -> segment 1 (60 px)
    ink(img1, 44, 20, 18, 4)   # I3 in text B2          -> segment 2 (72 px)
    ink(img1, 12, 40, 24, 4)   # I4 in text B3          -> segment 3 (96 px)
    ink(img1, 50, 42, 6, 2)    # I5 in page number      -> excluded  (12 px)
    ink(img1, 2, 54, 10, 2)    # I6 outside all regions -> excluded  (20 px)
    ink(img1, 12, 24, 8, 1)    # I7 in B1, no textline  -> excluded  ( 8 px)
    write_png(os.path.join(CORPUS, "images", "page_001.png"), img1)
    with open(os.path.join(CORPUS, "ocr", "page_001.xml"), "w") as f:
        f.write(pagexml("page_001", 80, 60, [
            ((10, 6, 20, 4), "HEADLINE"),      # L1 over I1
            ((10, 18, 24, 6), "first body"),   # L2 over I2 (not I7)
            ((42, 18, 24, 7), "second body"),  # L3 over I3
            ((10, 38, 30, 7), "third body"),   # L4 over I4
            ((49, 41, 9, 4), "17"),            # L5 over I5 (page number)
        ]))

    # --- page_002: one isolated text segment ---
    img2 = np.full((48, 64), 255, np.uint8)
    ink(img2, 10, 9, 20, 3)    # 60 px -> segment 1
    write_png(os.path.join(CORPUS, "images", "page_002.png"), img2)
    with open(os.path.join(CORPUS, "ocr", "page_002.xml"), "w") as f:
        f.write(pagexml("page_002", 64, 48, [
            ((8, 8, 30, 6), "lone paragraph"),
        ]))

    # --- page_003: two linked text boxes + excluded page number ---
    img3 = np.full((70, 100), 255, np.uint8)
    ink(img3, 10, 10, 16, 2)   # 32 px in B1 -> segment 1
    ink(img3, 10, 34, 16, 2)   # 32 px in B2 -> segment 1 (linked)
    ink(img3, 82, 62, 6, 2)    # 12 px page number -> excluded
    write_png(os.path.join(CORPUS, "images", "page_003.png"), img3)
    with open(os.path.join(CORPUS, "ocr", "page_003.xml"), "w") as f:
        f.write(pagexml("page_003", 100, 70, [
            ((8, 8, 30, 6), "column one"),
            ((8, 32, 30, 6), "column two"),
            ((81, 61, 9, 4), "42"),
        ]))

    # --- annotations ---
    doc = {
        "info": {"description": "fixture corpus"},
        "images": [
            {"id": 101, "file_name": "page_001.png", "width": 80, "height": 60},
            {"id": 102, "file_name": "page_002.png", "width": 64, "height": 48},
            {"id": 103, "file_name": "page_003.png", "width": 100, "height": 70},
        ],
        "categories": [
            {"id": 10, "name": "title"},
            {"id": 11, "name": "text"},
            {"id": 12, "name": "page-number"},
        ],
        "annotations": [
            {"id": 1, "image_id": 101, "category_id": 10, "bbox": [8, 4, 24, 8]},
            {"id": 2, "image_id": 101, "category_id": 11, "bbox": [8, 16, 28, 10]},
            {"id": 3, "image_id": 101, "category_id": 11, "bbox": [40, 16, 28, 10]},
            {"id": 4, "image_id": 101, "category_id": 11, "bbox": [8, 36, 34, 12]},
            {"id": 5, "image_id": 101, "category_id": 12, "bbox": [48, 40, 12, 6]},
            {"id": 6, "image_id": 102, "category_id": 11, "bbox": [6, 6, 40, 16]},
            {"id": 7, "image_id": 103, "category_id": 11, "bbox": [6, 6, 40, 20]},
            {"id": 8, "image_id": 103, "category_id": 11, "bbox": [6, 30, 40, 20]},
            {"id": 9, "image_id": 103, "category_id": 12, "bbox": [80, 60, 12, 6]},
        ],
        "relations": [
            {"source": 1, "target": 2},
            {"source": 7, "target": 8},
        ],
    }
    with open(os.path.join(CORPUS, "annotations.json"), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")

    print("fixtures written to", CORPUS)


if __name__ == "__main__":
    main()
