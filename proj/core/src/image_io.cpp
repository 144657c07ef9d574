#include "segbite/image.hpp"
#include "segbite/label_map.hpp"

#include "segbite/errors.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <cmath>
#include <fstream>
#include <map>

namespace segbite {

std::uint64_t BinaryMask::popcount() const {
    std::uint64_t n = 0;
    for (std::uint8_t b : bits) {
        n += b;
    }
    return n;
}

BinaryMask make_mask(Size size, bool value) {
    BinaryMask mask;
    mask.size = size;
    mask.bits.assign(std::size_t(size.area()), value ? 1 : 0);
    return mask;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed for " + path);
    }
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot create " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

GrayImage decode_gray_image(const std::vector<std::uint8_t>& bytes) {
    cv::Mat mat;
    try {
        // IMREAD_GRAYSCALE decodes color inputs through the Rec. 601 luma
        // transform and 8-bit depth.
        mat = cv::imdecode(bytes, cv::IMREAD_GRAYSCALE);
    } catch (const cv::Exception& e) {
        throw FormatError(std::string("image decode: ") + e.what());
    }
    if (mat.empty()) {
        throw FormatError("image decode: unsupported or corrupt image data");
    }
    GrayImage img;
    img.size = Size{mat.cols, mat.rows};
    img.pixels.resize(std::size_t(mat.total()));
    for (int y = 0; y < mat.rows; ++y) {
        const std::uint8_t* row = mat.ptr<std::uint8_t>(y);
        std::copy(row, row + mat.cols, img.pixels.begin() + std::size_t(y) * mat.cols);
    }
    return img;
}

GrayImage load_gray_image(const std::string& path) {
    return decode_gray_image(read_file(path));
}

LabelMap read_label_map(const std::vector<std::uint8_t>& bytes) {
    cv::Mat mat;
    try {
        mat = cv::imdecode(bytes, cv::IMREAD_UNCHANGED);
    } catch (const cv::Exception& e) {
        throw FormatError(std::string("label map decode: ") + e.what());
    }
    if (mat.empty()) {
        throw FormatError("label map decode: not a decodable image");
    }
    if (mat.type() != CV_16UC1) {
        throw FormatError("label map decode: expected single-channel 16-bit PNG");
    }
    LabelMap map;
    map.size = Size{mat.cols, mat.rows};
    map.labels.resize(std::size_t(mat.total()));
    for (int y = 0; y < mat.rows; ++y) {
        const std::uint16_t* row = mat.ptr<std::uint16_t>(y);
        std::uint32_t* dst = map.labels.data() + std::size_t(y) * mat.cols;
        for (int x = 0; x < mat.cols; ++x) {
            dst[x] = row[x];
        }
    }
    return map;
}

std::vector<std::uint8_t> write_label_map(const LabelMap& map) {
    if (!map.valid()) {
        throw FormatError("label map encode: dimensions do not match pixel count");
    }
    cv::Mat mat(map.size.height, map.size.width, CV_16UC1);
    for (int y = 0; y < map.size.height; ++y) {
        std::uint16_t* row = mat.ptr<std::uint16_t>(y);
        const std::uint32_t* src = map.labels.data() + std::size_t(y) * map.size.width;
        for (int x = 0; x < map.size.width; ++x) {
            if (src[x] > kMaxLabel) {
                throw FormatError("label map encode: label " + std::to_string(src[x]) +
                                  " exceeds the 16-bit label space");
            }
            row[x] = std::uint16_t(src[x]);
        }
    }
    std::vector<std::uint8_t> bytes;
    if (!cv::imencode(".png", mat, bytes)) {
        throw FormatError("label map encode: PNG encoder failed");
    }
    return bytes;
}

LabelMap load_label_map(const std::string& path) {
    return read_label_map(read_file(path));
}

void save_label_map(const LabelMap& map, const std::string& path) {
    write_file(path, write_label_map(map));
}

void save_label_overlay(const LabelMap& map, const std::string& path) {
    if (!map.valid()) {
        throw FormatError("label overlay: dimensions do not match pixel count");
    }
    // Golden-angle hue walk gives visually distinct neighbors without a
    // stored palette; the mapping label -> color is fixed.
    auto color_of = [](std::uint32_t label) {
        const double hue = std::fmod(double(label) * 137.508, 360.0) / 2.0; // OpenCV H in [0,180)
        cv::Mat hsv(1, 1, CV_8UC3, cv::Scalar(hue, 200, 230));
        cv::Mat bgr;
        cv::cvtColor(hsv, bgr, cv::COLOR_HSV2BGR);
        return bgr.at<cv::Vec3b>(0, 0);
    };
    std::map<std::uint32_t, cv::Vec3b> palette;
    cv::Mat out(map.size.height, map.size.width, CV_8UC3, cv::Scalar(0, 0, 0));
    for (int y = 0; y < map.size.height; ++y) {
        cv::Vec3b* row = out.ptr<cv::Vec3b>(y);
        const std::uint32_t* src = map.labels.data() + std::size_t(y) * map.size.width;
        for (int x = 0; x < map.size.width; ++x) {
            if (src[x] == 0) continue;
            auto it = palette.find(src[x]);
            if (it == palette.end()) {
                it = palette.emplace(src[x], color_of(src[x])).first;
            }
            row[x] = it->second;
        }
    }
    std::vector<std::uint8_t> bytes;
    if (!cv::imencode(".png", out, bytes)) {
        throw FormatError("label overlay: PNG encoder failed");
    }
    write_file(path, bytes);
}

} // namespace segbite
