#pragma once

#define ELIMGAME_VERSION_MAJOR 0
#define ELIMGAME_VERSION_MINOR 1
#define ELIMGAME_VERSION_PATCH 0
#define ELIMGAME_VERSION "0.1.0"
