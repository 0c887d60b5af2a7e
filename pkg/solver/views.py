"""Solver Views"""

from rest_framework import viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from django_filters.rest_framework import DjangoFilterBackend
from rest_framework.filters import SearchFilter, OrderingFilter
from .models import SolveRun
from .serializers import SolveRunSerializer, SolveRunDetailSerializer, FrontierPointSerializer


class SolveRunViewSet(viewsets.ReadOnlyModelViewSet):
    """Stored solve runs (read only)"""
    queryset = SolveRun.objects.all()
    filter_backends = [DjangoFilterBackend, SearchFilter, OrderingFilter]
    filterset_fields = ['instance', 'method', 'cut_enabled', 'timed_out']
    search_fields = ['instance_label']
    ordering_fields = ['created_at', 'total_seconds', 'points_found', 'bnb_nodes']

    def get_serializer_class(self):
        if self.action == 'retrieve':
            return SolveRunDetailSerializer
        return SolveRunSerializer

    @action(detail=True, methods=['get'])
    def frontier(self, request, pk=None):
        """Frontier points by ascending c_gamma"""
        run = self.get_object()
        serializer = FrontierPointSerializer(run.points.order_by('position'), many=True)
        return Response(serializer.data)
