"""Solver URLs"""

from django.urls import path, include
from rest_framework.routers import DefaultRouter
from .views import SolveRunViewSet

router = DefaultRouter()
router.register(r'runs', SolveRunViewSet, basename='run')

urlpatterns = [
    path('', include(router.urls)),
]
