#pragma once

#define QOSP_VERSION "0.1.0"
